#pragma once

#include <cstdint>
#include <random>

#include "steerkit/vec3.hpp"

namespace steerkit {

// Seedable generator built on std::mt19937_64, whose raw 64-bit output is
// specified bit-exactly by the standard. Uniform/normal conversions are done
// here rather than with std::*_distribution so results do not depend on
// libstdc++ internals.
//
// Stream splitting: stream r of a run with master seed s is seeded with
// splitmix64(s ^ (r+1) * 0x9E3779B97F4A7C15). Restarts use streams 0..R-1.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    static uint64_t splitmix64(uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    static uint64_t stream_seed(uint64_t seed, uint64_t stream) {
        return splitmix64(seed ^ (stream + 1) * 0x9E3779B97F4A7C15ull);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    uint32_t below(uint32_t n) {
        const auto k = static_cast<uint32_t>(uniform() * n);
        return k < n ? k : n - 1;
    }

    // Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Uniform on the unit sphere: z uniform in [-1, 1], azimuth in [0, 2 pi).
    Vec3 unit_vector() {
        const double z = 2.0 * uniform() - 1.0;
        const double azimuth = 2.0 * M_PI * uniform();
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(azimuth), r * std::sin(azimuth), z};
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace steerkit
