#include "steerkit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <json.hpp>

#include "steerkit/errors.hpp"
#include "steerkit/lhs_bound.hpp"

namespace steerkit {

void AnnealingConfig::validate() const {
    if (n_settings > kMaxAnnealSettings) {
        throw CapacityError("anneal caps at N = " + std::to_string(kMaxAnnealSettings) +
                            " (exact enumeration objective)");
    }
    if (n_settings < 2) throw ValidationError("anneal needs N >= 2");
    if (!(t_final > 0.0) || !(t_initial > t_final)) {
        throw ValidationError("temperatures must satisfy 0 < t_final < t_initial");
    }
    if (!(cooling > 0.0) || !(cooling < 1.0)) {
        throw ValidationError("cooling factor must lie in (0, 1)");
    }
    if (restarts < 1) throw ValidationError("restarts must be >= 1");
    for (double s : {move_scale_initial, move_scale_final}) {
        if (!(s > 0.0) || s > M_PI) throw ValidationError("move scales must lie in (0, pi]");
    }
}

namespace {

double objective(const std::vector<Vec3>& dirs) {
    return lhs_bound(MeasurementSet(dirs, {})).value;
}

// Rotate v by `angle` about `axis` (Rodrigues), renormalized to kill drift.
Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    const Vec3 r = v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c));
    return r.normalized();
}

}  // namespace

namespace detail {

RestartOutcome anneal_restart(const AnnealingConfig& config, Rng& rng) {
    const int n = config.n_settings;
    RestartOutcome out;

    std::vector<Vec3> current(static_cast<size_t>(n));
    for (Vec3& v : current) v = rng.unit_vector();
    double e_cur = objective(current);
    out.evaluations = 1;

    std::vector<Vec3> best = current;
    double e_best = e_cur;

    const double log_t0 = std::log(config.t_initial);
    const double log_t1 = std::log(config.t_final);
    const int sweeps = config.effective_sweeps();

    for (double t = config.t_initial; t > config.t_final; t *= config.cooling) {
        const double frac = (log_t0 - std::log(t)) / (log_t0 - log_t1);
        const double scale =
            config.move_scale_initial + (config.move_scale_final - config.move_scale_initial) * frac;
        for (int sweep = 0; sweep < sweeps; ++sweep) {
            const auto j = static_cast<size_t>(rng.below(static_cast<uint32_t>(n)));
            const Vec3 axis = rng.unit_vector();
            const double angle = std::abs(rng.normal()) * scale;
            const Vec3 saved = current[j];
            current[j] = rotate_about(saved, axis, angle);
            const double e_new = objective(current);
            ++out.evaluations;
            if (e_new <= e_cur || rng.uniform() < std::exp(-(e_new - e_cur) / t)) {
                e_cur = e_new;
                if (e_cur < e_best) {
                    e_best = e_cur;
                    best = current;
                }
            } else {
                current[j] = saved;
            }
        }
        out.best_per_temperature.push_back(e_best);
    }

    out.directions = std::move(best);
    out.bound = e_best;
    return out;
}

}  // namespace detail

OptimizationResult anneal(const AnnealingConfig& config) {
    config.validate();

    std::vector<Vec3> best_dirs;
    double best_bound = std::numeric_limits<double>::infinity();
    std::vector<std::pair<int, double>> history;
    uint64_t evaluations = 0;

    for (int r = 0; r < config.restarts; ++r) {
        Rng rng(Rng::stream_seed(config.seed, static_cast<uint64_t>(r)));
        detail::RestartOutcome outcome = detail::anneal_restart(config, rng);
        history.emplace_back(r, outcome.bound);
        evaluations += outcome.evaluations;
        if (outcome.bound < best_bound) {
            best_bound = outcome.bound;
            best_dirs = std::move(outcome.directions);
        }
    }

    MeasurementSet canonical = canonicalize(
        MeasurementSet(std::move(best_dirs), "anneal N=" + std::to_string(config.n_settings) +
                                                 " seed=" + std::to_string(config.seed)));
    const double final_bound = lhs_bound(canonical).value;
    ++evaluations;
    return OptimizationResult{std::move(canonical), final_bound, std::move(history), evaluations};
}

OptimizationResult refine(const MeasurementSet& set, int iterations) {
    const int n = set.size();
    if (n > kMaxAnnealSettings) {
        throw CapacityError("refine caps at N = " + std::to_string(kMaxAnnealSettings));
    }
    if (iterations < 0) throw ValidationError("refine iterations must be >= 0");

    std::vector<double> polar(static_cast<size_t>(n)), azimuth(static_cast<size_t>(n));
    std::vector<Vec3> dirs = set.directions();
    for (int j = 0; j < n; ++j) {
        const Vec3& v = dirs[static_cast<size_t>(j)];
        polar[static_cast<size_t>(j)] = std::acos(std::clamp(v.z, -1.0, 1.0));
        azimuth[static_cast<size_t>(j)] = std::atan2(v.y, v.x);
    }

    double e = objective(dirs);
    uint64_t evaluations = 1;
    double step = 0.05;

    for (int sweep = 0; sweep < iterations && step > 1e-10; ++sweep) {
        bool improved = false;
        for (size_t j = 0; j < static_cast<size_t>(n); ++j) {
            for (double* angle : {&polar[j], &azimuth[j]}) {
                for (double delta : {step, -step}) {
                    const double saved = *angle;
                    *angle = saved + delta;
                    const Vec3 old_dir = dirs[j];
                    dirs[j] = from_spherical(polar[j], azimuth[j]);
                    const double e_new = objective(dirs);
                    ++evaluations;
                    if (e_new < e) {
                        e = e_new;
                        improved = true;
                        break;
                    }
                    *angle = saved;
                    dirs[j] = old_dir;
                }
            }
        }
        if (!improved) step *= 0.5;
    }

    MeasurementSet canonical = canonicalize(MeasurementSet(std::move(dirs), set.label()));
    const double final_bound = lhs_bound(canonical).value;
    ++evaluations;
    return OptimizationResult{std::move(canonical), final_bound, {{0, e}}, evaluations};
}

MeasurementSet random_set(int n, uint64_t seed) {
    if (n < 1) throw ValidationError("random_set needs n >= 1");
    Rng rng(seed);
    std::vector<Vec3> dirs(static_cast<size_t>(n));
    for (Vec3& v : dirs) v = rng.unit_vector();
    return MeasurementSet(std::move(dirs),
                          "random n=" + std::to_string(n) + " seed=" + std::to_string(seed));
}

std::string to_json(const OptimizationResult& result, const AnnealingConfig& config) {
    nlohmann::json j;
    j["config"] = {{"n_settings", config.n_settings},
                   {"seed", config.seed},
                   {"t_initial", config.t_initial},
                   {"t_final", config.t_final},
                   {"cooling", config.cooling},
                   {"sweeps_per_temperature", config.effective_sweeps()},
                   {"restarts", config.restarts},
                   {"move_scale_initial", config.move_scale_initial},
                   {"move_scale_final", config.move_scale_final}};
    j["best_bound"] = result.best_bound;
    j["best_set"] = nlohmann::json::parse(to_json(result.best_set));
    auto& hist = j["history"] = nlohmann::json::array();
    for (const auto& [restart, bound] : result.history) {
        hist.push_back({restart, bound});
    }
    j["evaluations"] = result.evaluations;
    return j.dump(2);
}

}  // namespace steerkit
