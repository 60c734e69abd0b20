#pragma once

#include <string>
#include <vector>

#include "steerkit/vec3.hpp"

namespace steerkit {

// Tolerance on | ||b|| - 1 | for directions admitted into a set.
inline constexpr double kUnitNormTol = 1e-12;

// Ordered list of N >= 1 unit measurement directions with a free-text
// provenance label. Construction validates; instances are immutable.
class MeasurementSet {
public:
    // Throws ValidationError unless every direction is finite and unit to 1e-12
    // and the list is non-empty.
    MeasurementSet(std::vector<Vec3> directions, std::string label);

    // Renormalizes each direction to exact unit length first. Returns the set
    // and reports the largest ||b|| deviation that was corrected. Intended for
    // table data printed with few decimals.
    static MeasurementSet renormalized(std::vector<Vec3> directions, std::string label,
                                       double* max_delta = nullptr);

    int size() const { return static_cast<int>(directions_.size()); }
    const std::vector<Vec3>& directions() const { return directions_; }
    const Vec3& operator[](int j) const { return directions_[static_cast<size_t>(j)]; }
    const std::string& label() const { return label_; }

private:
    std::vector<Vec3> directions_;
    std::string label_;
};

// JSON wire format: {"label": string, "directions": [[x,y,z], ...]}.
std::string to_json(const MeasurementSet& set);
MeasurementSet measurement_set_from_json(const std::string& text);
MeasurementSet load_measurement_set(const std::string& path);
void save_measurement_set(const MeasurementSet& set, const std::string& path);

}  // namespace steerkit
