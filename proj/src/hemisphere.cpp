#include "steerkit/hemisphere.hpp"

#include <cmath>
#include <string>

#include "steerkit/errors.hpp"

namespace steerkit {

HemisphereSet build_hemisphere_set(const HemisphereConfig& config) {
    if (config.n_bands < 2) {
        throw ValidationError("hemisphere construction needs n >= 2 bands");
    }
    if (!(config.density > 0.0) || !std::isfinite(config.density)) {
        throw ValidationError("hemisphere density P must be positive");
    }
    const int n = config.n_bands;
    const double alpha = M_PI / (2.0 * n);

    std::vector<Vec3> dirs;
    std::vector<int> pk;
    std::vector<double> angles;
    for (int k = 1; k < n; ++k) {
        const double polar = k * alpha;
        const int p = std::max(1L, std::lround(config.density * std::sin(polar)));
        pk.push_back(p);
        angles.push_back(polar);
        for (int j = 0; j < p; ++j) {
            const double azimuth = config.azimuth_offset + 2.0 * M_PI * j / p;
            dirs.push_back(from_spherical(polar, azimuth));
        }
    }
    std::string label = "hemisphere n=" + std::to_string(n) + " P=" + std::to_string(config.density);
    return HemisphereSet{MeasurementSet(std::move(dirs), std::move(label)), std::move(pk),
                         std::move(angles)};
}

double all_ones_bound(const HemisphereSet& hs) {
    const auto& dirs = hs.set.directions();
    Vec3 total;
    size_t offset = 0;
    for (size_t band = 0; band < hs.points_per_band.size(); ++band) {
        const int p = hs.points_per_band[band];
        Vec3 band_sum;
        for (int j = 0; j < p; ++j) band_sum += dirs[offset + static_cast<size_t>(j)];
        offset += static_cast<size_t>(p);
        if (p >= 2 && (std::abs(band_sum.x) > 1e-10 || std::abs(band_sum.y) > 1e-10)) {
            throw ValidationError("band " + std::to_string(band + 1) +
                                  " x,y components failed to cancel");
        }
        total += band_sum;
    }
    return total.norm() / static_cast<double>(dirs.size());
}

double analytic_bound(long n) {
    if (n < 2) {
        throw ValidationError("analytic_bound needs n >= 2");
    }
    const double alpha = M_PI / (2.0 * static_cast<double>(n));
    double num = 0.0, den = 0.0;
    for (long k = 1; k < n; ++k) {
        const double s = std::sin(k * alpha);
        num += s * std::cos(k * alpha);
        den += s;
    }
    return num / den;
}

HemisphereExactCheck exact_bound_small(const HemisphereSet& hs) {
    if (hs.set.size() > kMaxEigSettings) {
        throw CapacityError("exact_bound_small caps at N = 20");
    }
    HemisphereExactCheck check;
    check.result = lhs_bound(hs.set);
    check.all_ones_value = all_ones_bound(hs);
    check.all_ones_maximizing = check.all_ones_value >= check.result.value - 1e-12;
    return check;
}

std::vector<ConvergenceRow> convergence_table(long n_max, double density) {
    if (n_max < 2) {
        throw ValidationError("convergence table needs n_max >= 2");
    }
    std::vector<ConvergenceRow> rows;
    rows.reserve(static_cast<size_t>(n_max - 1));
    for (long n = 2; n <= n_max; ++n) {
        HemisphereConfig cfg;
        cfg.n_bands = static_cast<int>(n);
        cfg.density = density;
        const HemisphereSet hs = build_hemisphere_set(cfg);
        rows.push_back({n, hs.set.size(), all_ones_bound(hs), analytic_bound(n)});
    }
    return rows;
}

}  // namespace steerkit
