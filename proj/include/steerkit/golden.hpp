#pragma once

#include <string>
#include <vector>

#include "steerkit/measurement_set.hpp"

namespace steerkit {

// One published direction set with its quoted bound. Raw entries are embedded
// exactly as printed (closed forms at full double precision, decimal entries
// with the printed digits), so decimal sets are slightly off unit norm and
// must be renormalized before use.
struct GoldenSet {
    std::string id;            // e.g. "sjwp-n6", "optimal-n6"
    std::string label;         // provenance text
    int n = 0;
    std::vector<Vec3> raw_directions;
    double quoted_bound = 0.0;
    double tolerance = 0.0;    // 1e-9 for closed forms, 5e-4 for 4-decimal data
    bool closed_form = false;
    std::string note;          // annotations (e.g. the N=5 / N=7 discrepancies)

    MeasurementSet renormalized(double* max_delta = nullptr) const {
        return MeasurementSet::renormalized(raw_directions, label, max_delta);
    }
};

// The five SJWP Platonic-solid sets (N = 2, 3, 4, 6, 10), closed forms.
const std::vector<GoldenSet>& sjwp_sets();

// The nine optimal sets for N = 2..10; closed forms for N = 2, 3, 4, 6, the
// exact five-direction set behind N = 5, and six-decimal data for N = 7..10.
const std::vector<GoldenSet>& optimal_sets();

// The four-decimal optimal sets for N = 12, 14, 16, 18, 20.
const std::vector<GoldenSet>& sm_sets();

// Lookup across all three tables. Throws ValidationError for unknown ids.
const GoldenSet& golden_set(const std::string& id);
std::vector<std::string> golden_ids();

}  // namespace steerkit
