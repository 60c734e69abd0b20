#pragma once

#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "steerkit/measurement_set.hpp"
#include "steerkit/qstate.hpp"

namespace steerkit {

// Outcome of evaluating the steering functional against a state.
// max_quantum_value fills only the quantum side (lhs_bound/margin stay NaN and
// detected false, since Alice's optimum needs no enumeration and is available
// for any N); detect fills everything.
struct ViolationResult {
    double quantum_value = 0.0;
    double lhs_bound = std::numeric_limits<double>::quiet_NaN();
    double margin = std::numeric_limits<double>::quiet_NaN();  // quantum_value - lhs_bound
    bool detected = false;                                     // margin > 0, strictly
    std::vector<Vec3> alice_directions;                        // empty if not computed
};

// (1/N) sum_j a_j . (T b_j) with T the correlation matrix; equals the direct
// trace (1/N) sum_j Tr[rho (a_j.sigma (x) b_j.sigma)].
double quantum_value(const DensityMatrix& rho, const MeasurementSet& alice,
                     const MeasurementSet& bob);

// Exact maximum over Alice's unit vectors: (1/N) sum_j ||T b_j||, attained at
// a_j = T b_j / ||T b_j||. Degenerate directions (||T b_j|| <= 1e-12) fall back
// to b_j and contribute zero.
ViolationResult max_quantum_value(const DensityMatrix& rho, const MeasurementSet& bob);

// max_quantum_value combined with lhs_bound(bob); detected iff margin > 0.
ViolationResult detect(const DensityMatrix& rho, const MeasurementSet& bob);

struct SweepAxis {
    std::string name;            // "v", "theta" or "gamma"
    std::vector<double> values;  // uniformly spaced
};

struct SweepGrid {
    StateFamily family = StateFamily::Werner;
    SweepAxis axis1;
    std::optional<SweepAxis> axis2;
    std::string set_label;   // provenance only
    StateParams base;        // values for parameters not swept
};

struct SweepRow {
    double param1 = 0.0;
    std::optional<double> param2;
    ViolationResult result;
};

// One detect() per grid point, row-major over (axis1, axis2). The LHS bound is
// computed once since Bob's set is fixed.
std::vector<SweepRow> sweep(const SweepGrid& grid, const MeasurementSet& bob);

// CSV: "param1,param2,quantum_value,lhs_bound,margin,detected"; booleans 0/1,
// param2 empty for 1-D sweeps.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct CriticalParameter {
    std::optional<double> first_detected_grid_point;
    std::optional<double> bisected;  // refined to 1e-6 between the flip's neighbors
};

// Scans `axis` (with the family's other parameters from `base`) for the first
// detected grid point, then bisects the detection boundary to 1e-6.
CriticalParameter critical_parameter(StateFamily family, const StateParams& base,
                                     const SweepAxis& axis, const MeasurementSet& bob);

// Applies an axis value onto a parameter pack by name.
StateParams with_param(StateParams base, const std::string& name, double value);

}  // namespace steerkit
