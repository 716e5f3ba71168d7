#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ctsim/disease.hpp"
#include "ctsim/scenario.hpp"
#include "ctsim/tracer.hpp"

namespace ctsim {

/// Everything a single trial needs besides the graph and the seed.
struct SimConfig {
    ScenarioConfig scenario;
    DiseaseParams disease;
    TraceParams tracer;
    InfectiousnessProfile profile = InfectiousnessProfile::default_profile();
    TestSensitivity sensitivity = TestSensitivity::default_schedule();
    bool collect_distributions = false; // per-event stats for diagnostic checks

    /// Disease parameters with the scenario's asymptomatic ratio applied.
    DiseaseParams effective_disease() const {
        DiseaseParams d = disease;
        d.asymptomatic_ratio = scenario.asymptomatic_ratio;
        return d;
    }
};

struct TrialResult {
    // daily series, index 0 = initial state, 1..horizon simulated days
    std::vector<int> S, E, I, R;
    std::vector<int> Q; // quarantined without a delivered positive (false + true)
    std::vector<int> T; // quarantined with a delivered positive, pre-recovery

    long quarantine_days_false = 0;
    long quarantine_days_true = 0;
    long quarantine_days_tested = 0;
    long tests_used = 0;
    int final_infected = 0; // E+I+R at the horizon, seed included
    int seed_secondary_infections = 0;

    // populated only when SimConfig::collect_distributions is set
    std::vector<int> symptomatic_test_delays; // first-test day - onset day
    std::vector<int> serial_intervals;        // infectee exposure - infector exposure
};

/// Runs one 120-day (configurable) trial: person `seed_person` starts
/// exposed on day 0, everyone else susceptible. Deterministic in
/// (config, graph, seed_person, trial_seed).
///
/// TrialRunner owns reusable buffers; one runner per thread, run() per trial.
class TrialRunner {
public:
    TrialRunner(const SimConfig& config, const TemporalContactGraph& graph);
    ~TrialRunner();
    TrialRunner(TrialRunner&&) noexcept;

    TrialResult run(PersonId seed_person, std::uint64_t trial_seed);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Single-call convenience wrapper around TrialRunner.
TrialResult run_trial(const SimConfig& config, const TemporalContactGraph& graph,
                      PersonId seed_person, std::uint64_t trial_seed);

} // namespace ctsim
