#pragma once

#include <cstdint>
#include <vector>

#include "ctsim/trial.hpp"

namespace ctsim {

struct AggregateResult {
    int trials = 0;
    double mean_infected = 0.0;
    double mean_quarantine_false = 0.0;
    double mean_quarantine_true = 0.0;
    double mean_quarantine_tested = 0.0;
    double mean_tests_used = 0.0;
    double mean_seed_secondary = 0.0;
    std::vector<double> mean_S, mean_E, mean_I, mean_R, mean_Q, mean_T;

    // pooled across trials when distribution collection is on
    std::vector<int> symptomatic_test_delays;
    std::vector<int> serial_intervals;

    double total_quarantine_days() const {
        return mean_quarantine_false + mean_quarantine_true + mean_quarantine_tested;
    }
};

struct EnsembleOptions {
    int trials = 1800;       // 10 trials per seed person on the 180-student network
    std::uint64_t master_seed = 20201215;
    int threads = 0;         // 0: hardware concurrency
};

/// Runs `trials` independent trials with per-trial seeds derived from the
/// master seed; trial i seeds the infection at person i % population.
/// When the scenario asks for the extended graph and `base` is smaller
/// than the scenario population, the extension is performed once (from a
/// derived stream) and shared read-only by all trials. Aggregation is a
/// deterministic reduction in trial order, independent of thread count.
AggregateResult run_ensemble(const SimConfig& config, const TemporalContactGraph& base,
                             const EnsembleOptions& opts);

/// R0 calibration sweep: for each p, runs an interventions-off ensemble
/// (scenario 1, no app users) and reports the mean number of secondary
/// infections caused directly by the seed.
std::vector<std::pair<double, double>> calibrate_r0(const SimConfig& base_config,
                                                    const TemporalContactGraph& base,
                                                    const EnsembleOptions& opts,
                                                    const std::vector<double>& p_grid);

/// Default p grid: 100 values, 0 to 0.2475 in increments of 0.0025.
std::vector<double> default_p_grid();

/// App-usage sweep, 0% to 100% in 5% steps: 21 (proportion, mean infected)
/// rows for the configured scenario.
std::vector<std::pair<double, double>> sweep_app_usage(const SimConfig& base_config,
                                                       const TemporalContactGraph& base,
                                                       const EnsembleOptions& opts);

} // namespace ctsim
