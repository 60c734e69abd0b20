#pragma once

#include <vector>

#include "steerkit/measurement_set.hpp"
#include "steerkit/rng.hpp"

namespace steerkit::testlib {

inline MeasurementSet make_set(std::vector<Vec3> dirs, std::string label = "test") {
    return MeasurementSet(std::move(dirs), std::move(label));
}

// Rodrigues rotation, for building gauge transforms in tests.
inline Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c));
}

inline MeasurementSet random_directions(int n, Rng& rng, std::string label = "random") {
    std::vector<Vec3> dirs(static_cast<size_t>(n));
    for (auto& v : dirs) v = rng.unit_vector();
    return MeasurementSet(std::move(dirs), std::move(label));
}

}  // namespace steerkit::testlib
