#include "ctsim/trial.hpp"

#include <algorithm>
#include <deque>

#include "ctsim/errors.hpp"

namespace ctsim {

struct TrialRunner::Impl {
    SimConfig cfg;
    const TemporalContactGraph* graph = nullptr;
    DiseaseParams disease; // scenario asymptomatic ratio applied
    std::uint32_t population = 0;
    ContactTracer tracer;

    // per-trial buffers, reused across runs
    std::vector<PersonState> states;
    std::vector<std::uint8_t> app_users;
    std::vector<std::uint8_t> quarantined;
    std::vector<std::uint8_t> has_pending;
    std::vector<std::uint8_t> tested_ever;
    std::vector<std::uint8_t> followup_due;
    std::vector<double> factors;
    std::deque<PendingTest> result_queue; // FIFO: same delay for every test

    Impl(const SimConfig& config, const TemporalContactGraph& g)
        : cfg(config),
          graph(&g),
          disease(config.effective_disease()),
          population(g.population),
          tracer(g.population, config.scenario.horizon_days, config.tracer,
                 config.tracer.window + config.disease.result_delay_days + 2) {
        disease.validate();
        if (population == 0 || graph->base_days.size() < 2)
            throw config_error("trial needs a graph with >= 2 base days");
    }

    TrialResult run(PersonId seed_person, std::uint64_t trial_seed);
};

TrialResult TrialRunner::Impl::run(PersonId seed_person, std::uint64_t trial_seed) {
    if (seed_person >= population) throw config_error("seed person outside population");
    const int horizon = cfg.scenario.horizon_days;
    Rng rng(trial_seed);

    app_users = assign_app_users(population, cfg.scenario.app_proportion, rng);
    const bool tracing =
        std::any_of(app_users.begin(), app_users.end(), [](std::uint8_t f) { return f != 0; });
    if (tracing) tracer.reset(app_users);

    states.assign(population, PersonState{});
    for (PersonId p = 0; p < population; ++p) states[p].app_user = app_users[p] != 0;
    quarantined.assign(population, 0);
    has_pending.assign(population, 0);
    tested_ever.assign(population, 0);
    followup_due.assign(population, 0);
    factors.assign(population, 1.0);
    result_queue.clear();

    PersonState& seed = states[seed_person];
    seed.compartment = Compartment::E;
    seed.exposure_day = 0;
    seed.onset_day = sample_incubation(disease, rng);
    seed.asymptomatic = uniform01(rng) < disease.asymptomatic_ratio;

    TrialResult res;
    res.S.assign(horizon + 1, 0);
    res.E.assign(horizon + 1, 0);
    res.I.assign(horizon + 1, 0);
    res.R.assign(horizon + 1, 0);
    res.Q.assign(horizon + 1, 0);
    res.T.assign(horizon + 1, 0);
    res.S[0] = static_cast<int>(population) - 1;
    res.E[0] = 1;

    std::vector<TransmissionEvent> events;

    for (int day = 1; day <= horizon; ++day) {
        // 1. deliver pending results
        while (!result_queue.empty() && result_queue.front().delivery_day <= day) {
            const PendingTest test = result_queue.front();
            result_queue.pop_front();
            has_pending[test.person] = 0;
            if (test.positive && !states[test.person].confirmed()) {
                states[test.person].first_positive_day = day;
                if (states[test.person].app_user)
                    tracer.report_positive(test.person, test.sample_day);
            }
        }

        // 2. tracing update, quarantine set, notification factors
        std::fill(quarantined.begin(), quarantined.end(), 0);
        std::fill(factors.begin(), factors.end(), 1.0);
        std::fill(followup_due.begin(), followup_due.end(), 0);
        if (tracing) {
            tracer.update_day(day);
            for (PersonId p : tracer.quarantine_candidates()) quarantined[p] = 1;
            if (cfg.scenario.pre_exposure) tracer.notification_factors(factors);
            if (cfg.scenario.followup_testing)
                for (PersonId p : tracer.followup_test_set(day)) followup_due[p] = 1;
        }
        for (PersonId p = 0; p < population; ++p)
            if (states[p].confirmed() && states[p].compartment != Compartment::R)
                quarantined[p] = 1;

        // quarantine-day accounting at application time
        int q_count = 0, t_count = 0;
        for (PersonId p = 0; p < population; ++p) {
            states[p].in_quarantine = quarantined[p] != 0;
            if (!quarantined[p]) continue;
            if (states[p].confirmed()) {
                ++res.quarantine_days_tested;
                ++t_count;
            } else if (states[p].infectious_now()) {
                ++res.quarantine_days_true;
                ++q_count;
            } else {
                ++res.quarantine_days_false;
                ++q_count;
            }
        }
        res.Q[day] = q_count;
        res.T[day] = t_count;

        // 3. today's physical contacts with modifiers applied
        const DaySnapshot physical = synthesize_day(graph->base_days, rng);
        const DaySnapshot effective = effective_day(physical, quarantined, factors);

        // 4. the app sees the effective graph; transmission runs on it
        if (tracing) tracer.record_contacts(effective, day);
        step_transmission(effective, day, states, disease, cfg.profile, rng, seed_person,
                          &res.seed_secondary_infections,
                          cfg.collect_distributions ? &events : nullptr);

        // 5. progression; recovered confirmed app users report recovery
        for (PersonId p : step_progression(day, states, disease, rng))
            if (states[p].app_user && states[p].confirmed()) tracer.report_recovery(p, day);

        // 6. testing: symptom-driven, follow-up, periodic
        const bool periodic_day =
            is_periodic_test_day(day, cfg.scenario.periodic_test_interval);
        for (PersonId p = 0; p < population; ++p) {
            if (states[p].confirmed() || has_pending[p]) continue;
            bool symptomatic_trigger = false;
            if (states[p].compartment == Compartment::I && !states[p].asymptomatic)
                symptomatic_trigger = uniform01(rng) < disease.daily_symptomatic_test_prob;
            const bool want = symptomatic_trigger || followup_due[p] || periodic_day;
            if (!want) continue;
            PendingTest test = administer_test(p, day, states, disease, cfg.sensitivity, rng);
            result_queue.push_back(test);
            has_pending[p] = 1;
            ++res.tests_used;
            if (cfg.collect_distributions && symptomatic_trigger && !tested_ever[p])
                res.symptomatic_test_delays.push_back(day - states[p].onset_day);
            tested_ever[p] = 1;
        }

        // end of day: close the exposure-matrix recursion and record series
        if (tracing) tracer.finalize_day(day);
        int s = 0, e = 0, i = 0, r = 0;
        for (const PersonState& st : states) {
            switch (st.compartment) {
                case Compartment::S: ++s; break;
                case Compartment::E: ++e; break;
                case Compartment::I: ++i; break;
                case Compartment::R: ++r; break;
            }
        }
        res.S[day] = s;
        res.E[day] = e;
        res.I[day] = i;
        res.R[day] = r;
    }

    res.final_infected = static_cast<int>(population) - res.S[horizon];
    if (cfg.collect_distributions) {
        for (const auto& ev : events)
            res.serial_intervals.push_back(ev.day - states[ev.infector].exposure_day);
    }
    return res;
}

TrialRunner::TrialRunner(const SimConfig& config, const TemporalContactGraph& graph)
    : impl_(std::make_unique<Impl>(config, graph)) {}

TrialRunner::~TrialRunner() = default;
TrialRunner::TrialRunner(TrialRunner&&) noexcept = default;

TrialResult TrialRunner::run(PersonId seed_person, std::uint64_t trial_seed) {
    return impl_->run(seed_person, trial_seed);
}

TrialResult run_trial(const SimConfig& config, const TemporalContactGraph& graph,
                      PersonId seed_person, std::uint64_t trial_seed) {
    TrialRunner runner(config, graph);
    return runner.run(seed_person, trial_seed);
}

} // namespace ctsim
