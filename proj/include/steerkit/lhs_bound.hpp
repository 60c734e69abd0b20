#pragma once

#include <cstdint>
#include <vector>

#include "steerkit/measurement_set.hpp"

namespace steerkit {

// Hard caps on the exhaustive sign-assignment scans.
inline constexpr int kMaxBoundSettings = 30;
inline constexpr int kMaxEigSettings = 20;

// LHS bound of an N-setting linear steering inequality together with the
// maximizing outcome assignment.
struct BoundResult {
    double value = 0.0;            // (1/N) max_A || sum_j A_j b_j ||
    std::vector<int> signs;        // maximizing A in {+1,-1}^N, signs[0] == +1
    Vec3 resultant;                // (1/N) sum_j signs[j] * b_j, norm == value
};

// Exact LHS bound by enumerating the 2^(N-1) sign assignments (A_1 fixed +1;
// a global flip leaves the norm unchanged) with Gray-code single-flip updates
// of the running resultant. Ties between maximizers are broken toward the
// lexicographically smallest sign vector under +1 < -1. The reported value and
// resultant are recomputed exactly from the winning assignment.
//
// threads > 1 splits the assignment range into equal chunks; chunk winners are
// re-evaluated exactly before the final reduction, so the result is
// deterministic for a fixed thread count.
//
// Throws CapacityError for N > 30.
BoundResult lhs_bound(const MeasurementSet& set, int threads = 1);

// Independent oracle for the same bound: (1/N) max_A lambda_max(sum_j A_j b_j.sigma),
// with lambda_max obtained from a dense 2x2 complex Hermitian eigensolver (not
// from the norm identity, so the two routes share no computation).
// Throws CapacityError for N > 20.
double lhs_bound_eig(const MeasurementSet& set);

// Gauge-fixes a set into the northern-hemisphere form: flips each direction by
// its maximizing sign (all-ones becomes a maximizer) and rotates the resultant
// onto +z. The bound is invariant under both operations.
// Throws ValidationError if the maximizing resultant is degenerate (cannot
// happen for unit directions: the bound is at least 1/sqrt(N)).
MeasurementSet canonicalize(const MeasurementSet& set);

// BoundResult JSON: {"value": f, "signs": [...], "resultant": [x,y,z]}.
std::string to_json(const BoundResult& r);

}  // namespace steerkit
