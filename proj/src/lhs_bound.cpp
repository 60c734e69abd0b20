#include "steerkit/lhs_bound.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <complex>
#include <thread>

#include <Eigen/Dense>
#include <json.hpp>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

// Sign mask convention: bit (j-1) set means A_j = -1 for direction j = 1..N-1;
// A_0 is pinned to +1. mask == 0 is the all-ones assignment.

Vec3 resultant_of_mask(const std::vector<Vec3>& dirs, uint32_t mask) {
    Vec3 r = dirs[0];
    for (size_t j = 1; j < dirs.size(); ++j) {
        if ((mask >> (j - 1)) & 1u) {
            r -= dirs[j];
        } else {
            r += dirs[j];
        }
    }
    return r;
}

// Lexicographic order on sign vectors with +1 < -1; direction 1 (bit 0) is the
// most significant position.
bool lex_less(uint32_t a, uint32_t b, int nbits) {
    for (int j = 0; j < nbits; ++j) {
        const uint32_t ba = (a >> j) & 1u;
        const uint32_t bb = (b >> j) & 1u;
        if (ba != bb) return ba < bb;
    }
    return false;
}

struct ScanWinner {
    double norm2 = -1.0;
    uint32_t mask = 0;
};

// Scans assignment indices [lo, hi) in Gray order. The running resultant is
// refreshed from the mask every 2^20 steps to cap floating-point drift over
// long scans (up to 2^29 steps at N = 30).
ScanWinner scan_range(const std::vector<Vec3>& dirs, uint64_t lo, uint64_t hi, int nbits) {
    uint32_t mask = static_cast<uint32_t>(lo ^ (lo >> 1));
    Vec3 r = resultant_of_mask(dirs, mask);
    ScanWinner best{r.norm2(), mask};
    constexpr uint64_t kRefreshMask = (1u << 20) - 1;
    for (uint64_t i = lo + 1; i < hi; ++i) {
        const int k = std::countr_zero(i);
        const Vec3& d = dirs[static_cast<size_t>(k) + 1];
        if ((mask >> k) & 1u) {
            r += 2.0 * d;
        } else {
            r -= 2.0 * d;
        }
        mask ^= (1u << k);
        if ((i & kRefreshMask) == 0) r = resultant_of_mask(dirs, mask);
        const double n2 = r.norm2();
        if (n2 > best.norm2 || (n2 == best.norm2 && lex_less(mask, best.mask, nbits))) {
            best = {n2, mask};
        }
    }
    return best;
}

}  // namespace

BoundResult lhs_bound(const MeasurementSet& set, int threads) {
    const int n = set.size();
    if (n > kMaxBoundSettings) {
        throw CapacityError("lhs_bound enumerates 2^(N-1) assignments; N = " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(kMaxBoundSettings));
    }
    const std::vector<Vec3>& dirs = set.directions();
    const int nbits = n - 1;
    const uint64_t total = uint64_t{1} << nbits;

    int nthreads = std::max(1, threads);
    // Chunking below ~4k assignments costs more than it saves.
    nthreads = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(nthreads), total / 4096 + 1));

    std::vector<ScanWinner> winners(static_cast<size_t>(nthreads));
    if (nthreads == 1) {
        winners[0] = scan_range(dirs, 0, total, nbits);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) {
            const uint64_t lo = total * static_cast<uint64_t>(t) / static_cast<uint64_t>(nthreads);
            const uint64_t hi = total * static_cast<uint64_t>(t + 1) / static_cast<uint64_t>(nthreads);
            pool.emplace_back([&dirs, &winners, t, lo, hi, nbits] {
                winners[static_cast<size_t>(t)] = scan_range(dirs, lo, hi, nbits);
            });
        }
        for (auto& th : pool) th.join();
    }

    // Re-evaluate each winner from scratch so the reduction (and the reported
    // value) never depends on drift accumulated during the scan.
    ScanWinner best;
    for (const ScanWinner& w : winners) {
        const double n2 = resultant_of_mask(dirs, w.mask).norm2();
        if (n2 > best.norm2 || (n2 == best.norm2 && lex_less(w.mask, best.mask, nbits))) {
            best = {n2, w.mask};
        }
    }

    BoundResult out;
    out.signs.assign(static_cast<size_t>(n), 1);
    for (int j = 1; j < n; ++j) {
        if ((best.mask >> (j - 1)) & 1u) out.signs[static_cast<size_t>(j)] = -1;
    }
    const Vec3 sum = resultant_of_mask(dirs, best.mask);
    out.resultant = sum / static_cast<double>(n);
    out.value = sum.norm() / static_cast<double>(n);
    return out;
}

double lhs_bound_eig(const MeasurementSet& set) {
    const int n = set.size();
    if (n > kMaxEigSettings) {
        throw CapacityError("lhs_bound_eig solves 2^(N-1) eigenproblems; N = " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(kMaxEigSettings));
    }
    const std::vector<Vec3>& dirs = set.directions();
    const uint64_t total = uint64_t{1} << (n - 1);
    const std::complex<double> i_unit(0.0, 1.0);

    double best = -std::numeric_limits<double>::infinity();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver;
    for (uint64_t mask = 0; mask < total; ++mask) {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        for (int j = 0; j < n; ++j) {
            const double a = (j > 0 && ((mask >> (j - 1)) & 1u)) ? -1.0 : 1.0;
            const Vec3& b = dirs[static_cast<size_t>(j)];
            m(0, 0) += a * b.z;
            m(1, 1) -= a * b.z;
            m(0, 1) += a * (b.x - i_unit * b.y);
            m(1, 0) += a * (b.x + i_unit * b.y);
        }
        solver.compute(m, Eigen::EigenvaluesOnly);
        best = std::max(best, solver.eigenvalues()(1));
    }
    return best / static_cast<double>(n);
}

MeasurementSet canonicalize(const MeasurementSet& set) {
    const BoundResult b = lhs_bound(set);
    const int n = set.size();

    std::vector<Vec3> dirs(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        dirs[static_cast<size_t>(j)] = static_cast<double>(b.signs[static_cast<size_t>(j)]) * set[j];
    }

    const double rnorm = b.resultant.norm();
    if (rnorm < 1e-12) {
        throw ValidationError("canonicalize: degenerate resultant, rotation undefined");
    }
    const Vec3 rhat = b.resultant / rnorm;

    const bool already_z =
        std::abs(rhat.x) <= 1e-12 && std::abs(rhat.y) <= 1e-12 && std::abs(rhat.z - 1.0) <= 1e-12;
    if (!already_z) {
        // R_y(-theta) R_z(-phi) maps the resultant onto +z.
        const double theta = std::acos(std::clamp(rhat.z, -1.0, 1.0));
        const double phi = std::atan2(rhat.y, rhat.x);
        const double cp = std::cos(phi), sp = std::sin(phi);
        const double ct = std::cos(theta), st = std::sin(theta);
        for (Vec3& v : dirs) {
            const Vec3 w{v.x * cp + v.y * sp, -v.x * sp + v.y * cp, v.z};
            v = {w.x * ct - w.z * st, w.y, w.x * st + w.z * ct};
        }
    }
    for (Vec3& v : dirs) v = v.normalized();
    return MeasurementSet(std::move(dirs), set.label());
}

std::string to_json(const BoundResult& r) {
    nlohmann::json j;
    j["value"] = r.value;
    j["signs"] = r.signs;
    j["resultant"] = {r.resultant.x, r.resultant.y, r.resultant.z};
    return j.dump(2);
}

}  // namespace steerkit
