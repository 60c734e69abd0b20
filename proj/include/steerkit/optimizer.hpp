#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "steerkit/measurement_set.hpp"
#include "steerkit/rng.hpp"

namespace steerkit {

inline constexpr int kMaxAnnealSettings = 20;

// Simulated-annealing schedule. The paper names the algorithm but gives no
// parameters; these defaults target the objective's O(0.1) range.
struct AnnealingConfig {
    int n_settings = 4;
    uint64_t seed = 1;
    double t_initial = 0.05;
    double t_final = 1e-5;
    double cooling = 0.97;                // geometric temperature factor
    int sweeps_per_temperature = 0;       // <= 0 means the 50*N default
    int restarts = 20;
    double move_scale_initial = 0.5;      // radians; decays linearly in log T
    double move_scale_final = 0.005;

    int effective_sweeps() const {
        return sweeps_per_temperature > 0 ? sweeps_per_temperature : 50 * n_settings;
    }
    void validate() const;  // throws ValidationError / CapacityError
};

struct OptimizationResult {
    MeasurementSet best_set;                      // canonicalized
    double best_bound = 0.0;
    std::vector<std::pair<int, double>> history;  // (restart index, final bound)
    uint64_t evaluations = 0;                     // objective (lhs_bound) calls
};

// Minimizes lhs_bound over direction sets. Deterministic for a fixed config;
// restarts use split RNG streams and are reduced by lowest bound, ties to the
// lower restart index.
OptimizationResult anneal(const AnnealingConfig& config);

// Derivative-free polish: coordinate descent on each direction's polar and
// azimuthal angle with shrinking steps. Never worsens the bound. `iterations`
// caps the number of full sweeps.
OptimizationResult refine(const MeasurementSet& set, int iterations);

// n i.i.d. uniform directions; same (n, seed) gives the same set.
MeasurementSet random_set(int n, uint64_t seed);

namespace detail {

struct RestartOutcome {
    std::vector<Vec3> directions;
    double bound = 0.0;
    uint64_t evaluations = 0;
    std::vector<double> best_per_temperature;  // non-increasing by construction
};

// One annealing restart driven by an externally seeded stream.
RestartOutcome anneal_restart(const AnnealingConfig& config, Rng& rng);

}  // namespace detail

// OptimizationResult JSON, including a config echo for provenance.
std::string to_json(const OptimizationResult& result, const AnnealingConfig& config);

}  // namespace steerkit
