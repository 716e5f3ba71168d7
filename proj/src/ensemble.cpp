#include "ctsim/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "ctsim/errors.hpp"

namespace ctsim {

namespace {

const TemporalContactGraph* prepare_graph(const SimConfig& config,
                                          const TemporalContactGraph& base,
                                          TemporalContactGraph& storage,
                                          std::uint64_t master_seed) {
    if (config.scenario.use_extended_graph && base.population < config.scenario.population) {
        Rng rng(derived_seed(master_seed, 1));
        storage = extend_graph(base, config.scenario.population, rng);
        return &storage;
    }
    return &base;
}

} // namespace

AggregateResult run_ensemble(const SimConfig& config, const TemporalContactGraph& base,
                             const EnsembleOptions& opts) {
    if (opts.trials <= 0) throw config_error("ensemble needs at least one trial");

    TemporalContactGraph extended;
    const TemporalContactGraph* graph =
        prepare_graph(config, base, extended, opts.master_seed);
    const std::uint32_t population = graph->population;

    // per-trial seeds: the i-th output of the splitmix stream
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(opts.trials));
    std::uint64_t state = opts.master_seed;
    for (auto& s : seeds) s = splitmix64(state);

    std::vector<TrialResult> results(static_cast<std::size_t>(opts.trials));
    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, opts.trials);

    std::atomic<int> next{0};
    auto worker = [&]() {
        TrialRunner runner(config, *graph);
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= opts.trials) break;
            const PersonId seed_person = static_cast<PersonId>(i % population);
            results[static_cast<std::size_t>(i)] = runner.run(seed_person, seeds[i]);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // deterministic reduction in trial order
    AggregateResult agg;
    agg.trials = opts.trials;
    const std::size_t days = results.front().S.size();
    agg.mean_S.assign(days, 0.0);
    agg.mean_E.assign(days, 0.0);
    agg.mean_I.assign(days, 0.0);
    agg.mean_R.assign(days, 0.0);
    agg.mean_Q.assign(days, 0.0);
    agg.mean_T.assign(days, 0.0);
    for (const TrialResult& r : results) {
        agg.mean_infected += r.final_infected;
        agg.mean_quarantine_false += static_cast<double>(r.quarantine_days_false);
        agg.mean_quarantine_true += static_cast<double>(r.quarantine_days_true);
        agg.mean_quarantine_tested += static_cast<double>(r.quarantine_days_tested);
        agg.mean_tests_used += static_cast<double>(r.tests_used);
        agg.mean_seed_secondary += r.seed_secondary_infections;
        for (std::size_t d = 0; d < days; ++d) {
            agg.mean_S[d] += r.S[d];
            agg.mean_E[d] += r.E[d];
            agg.mean_I[d] += r.I[d];
            agg.mean_R[d] += r.R[d];
            agg.mean_Q[d] += r.Q[d];
            agg.mean_T[d] += r.T[d];
        }
        agg.symptomatic_test_delays.insert(agg.symptomatic_test_delays.end(),
                                           r.symptomatic_test_delays.begin(),
                                           r.symptomatic_test_delays.end());
        agg.serial_intervals.insert(agg.serial_intervals.end(), r.serial_intervals.begin(),
                                    r.serial_intervals.end());
    }
    const double n = static_cast<double>(opts.trials);
    agg.mean_infected /= n;
    agg.mean_quarantine_false /= n;
    agg.mean_quarantine_true /= n;
    agg.mean_quarantine_tested /= n;
    agg.mean_tests_used /= n;
    agg.mean_seed_secondary /= n;
    for (std::size_t d = 0; d < days; ++d) {
        agg.mean_S[d] /= n;
        agg.mean_E[d] /= n;
        agg.mean_I[d] /= n;
        agg.mean_R[d] /= n;
        agg.mean_Q[d] /= n;
        agg.mean_T[d] /= n;
    }
    return agg;
}

std::vector<double> default_p_grid() {
    std::vector<double> grid;
    grid.reserve(100);
    for (int i = 0; i < 100; ++i) grid.push_back(i * 0.0025);
    return grid;
}

std::vector<std::pair<double, double>> calibrate_r0(const SimConfig& base_config,
                                                    const TemporalContactGraph& base,
                                                    const EnsembleOptions& opts,
                                                    const std::vector<double>& p_grid) {
    SimConfig config = base_config;
    config.scenario = build_scenario(1, 0.0, config.scenario.asymptomatic_ratio);
    config.scenario.horizon_days = base_config.scenario.horizon_days;
    config.collect_distributions = false;

    std::vector<std::pair<double, double>> curve;
    curve.reserve(p_grid.size());
    for (double p : p_grid) {
        config.disease.p = p;
        const AggregateResult agg = run_ensemble(config, base, opts);
        curve.emplace_back(p, agg.mean_seed_secondary);
    }
    return curve;
}

std::vector<std::pair<double, double>> sweep_app_usage(const SimConfig& base_config,
                                                       const TemporalContactGraph& base,
                                                       const EnsembleOptions& opts) {
    std::vector<std::pair<double, double>> curve;
    curve.reserve(21);
    for (int i = 0; i <= 20; ++i) {
        const double proportion = i * 0.05;
        SimConfig config = base_config;
        config.scenario.app_proportion = proportion;
        const AggregateResult agg = run_ensemble(config, base, opts);
        curve.emplace_back(proportion, agg.mean_infected);
    }
    return curve;
}

} // namespace ctsim
