#pragma once

#include <vector>

#include "steerkit/lhs_bound.hpp"
#include "steerkit/measurement_set.hpp"

namespace steerkit {

// Circle-stratified northern-hemisphere construction: the quarter arc from +z
// to the equator is divided into n parts (alpha = pi/(2n)); circle k = 1..n-1
// sits at polar angle k*alpha and carries p_k = max(1, round(P sin(k*alpha)))
// evenly spaced points.
struct HemisphereConfig {
    int n_bands = 2;          // n >= 2, giving n-1 circles
    double density = 1.0;     // P > 0, points-per-circle scale
    double azimuth_offset = 0.0;  // phase of the points on every circle
};

struct HemisphereSet {
    MeasurementSet set;
    std::vector<int> points_per_band;  // p_k, k = 1..n-1
    std::vector<double> band_angles;   // k*alpha
};

HemisphereSet build_hemisphere_set(const HemisphereConfig& config);

// ||sum of all directions|| / N. Verifies (within 1e-10) that the x,y
// components of every band with p_k >= 2 cancel.
double all_ones_bound(const HemisphereSet& hs);

// Continuum-limit bound at n bands: sum_k sin(k a) cos(k a) / sum_k sin(k a)
// with a = pi/(2n), evaluated by direct summation. Decreases to 1/2.
double analytic_bound(long n);

struct HemisphereExactCheck {
    BoundResult result;        // full enumeration over sign assignments
    double all_ones_value;     // bound of the all-ones assignment
    bool all_ones_maximizing;  // all_ones_value >= result.value - 1e-12
};

// Exact enumeration for small hemisphere sets (N <= 20); reports whether the
// all-ones assignment attains the maximum.
HemisphereExactCheck exact_bound_small(const HemisphereSet& hs);

struct ConvergenceRow {
    long n = 0;
    long total_settings = 0;
    double all_ones = 0.0;
    double analytic = 0.0;
};

// Rows for n = 2..n_max at fixed density; CSV header "n,N,all_ones,analytic".
std::vector<ConvergenceRow> convergence_table(long n_max, double density);

}  // namespace steerkit
