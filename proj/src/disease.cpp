#include "ctsim/disease.hpp"

#include <algorithm>
#include <cmath>

#include "ctsim/errors.hpp"

namespace ctsim {

void DiseaseParams::validate() const {
    auto prob = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!prob(p) || !prob(lambda) || !prob(asymptomatic_ratio) ||
        !prob(daily_symptomatic_test_prob))
        throw config_error("disease probabilities must lie in [0,1]");
    if (incubation_sigma <= 0.0) throw config_error("incubation sigma must be positive");
    if (result_delay_days < 0) throw config_error("result delay must be >= 0");
}

InfectiousnessProfile::InfectiousnessProfile(int start_offset, std::vector<double> weights)
    : start_offset_(start_offset), weights_(std::move(weights)) {
    if (weights_.empty()) throw config_error("infectiousness profile is empty");
    double sum = 0.0;
    for (double w : weights_) {
        if (w < 0.0) throw config_error("infectiousness weights must be nonnegative");
        sum += w;
    }
    if (sum <= 0.0) throw config_error("infectiousness profile sums to zero");
    for (double& w : weights_) w /= sum;
}

InfectiousnessProfile InfectiousnessProfile::default_profile() {
    // Discretized gamma(k = 3.5895, theta = 1.9309) evaluated at offsets
    // -5..+10 (argument offset+6) and normalized: peaks one day before
    // symptom onset; the six largest values average 0.11.
    return InfectiousnessProfile(-5, {
                                         0.015574076246, // -5
                                         0.055846588002, // -4
                                         0.095074299421, // -3
                                         0.119308277453, // -2
                                         0.126677026792, // -1 (peak)
                                         0.121008714532, //  0
                                         0.107461873136, // +1
                                         0.090469808666, // +2
                                         0.073121030312, // +3
                                         0.057228259879, // +4
                                         0.043639136697, // +5
                                         0.032569336353, // +6
                                         0.023872873022, // +7
                                         0.017231625639, // +8
                                         0.012274261197, // +9
                                         0.008642812654, // +10
                                     });
}

double InfectiousnessProfile::top_six_mean() const {
    std::vector<double> sorted(weights_.begin(), weights_.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const std::size_t k = std::min<std::size_t>(6, sorted.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += sorted[i];
    return sum / static_cast<double>(k);
}

TestSensitivity::TestSensitivity(int start_offset, std::vector<double> false_negative)
    : start_offset_(start_offset), table_(std::move(false_negative)) {
    if (table_.empty()) throw config_error("sensitivity table is empty");
    for (double v : table_)
        if (v < 0.0 || v > 1.0) throw config_error("false-negative rates must lie in [0,1]");
}

TestSensitivity TestSensitivity::default_schedule() {
    // False-negative rate by onset offset: 1.0 at and below -4 (tests are
    // blind before infectiousness), best at +3, then a slow linear rise to
    // 0.50 by +14 and 0.60 from +15 on.
    std::vector<double> fn = {
        1.00, // -5 and below
        1.00, // -4
        0.95, // -3
        0.85, // -2
        0.75, // -1
        0.67, //  0
        0.40, // +1
        0.30, // +2
        0.20, // +3
    };
    for (int off = 4; off <= 14; ++off) // 0.25 at +4 rising linearly to 0.50 at +14
        fn.push_back(0.25 + 0.025 * (off - 4));
    fn.push_back(0.60); // +15 and beyond
    return TestSensitivity(-5, std::move(fn));
}

int sample_incubation(const DiseaseParams& params, Rng& rng) {
    std::lognormal_distribution<double> dist(params.incubation_mu, params.incubation_sigma);
    const long days = std::lround(dist(rng));
    return static_cast<int>(std::max(1L, days));
}

double transmission_probability(std::uint32_t duration, int day_offset,
                                const DiseaseParams& params,
                                const InfectiousnessProfile& profile) {
    if (duration == 0) return 0.0;
    const double per_unit = params.p * profile.value(day_offset);
    if (per_unit <= 0.0) return 0.0;
    if (per_unit >= 1.0) return 1.0;
    return 1.0 - std::pow(1.0 - per_unit, static_cast<double>(duration));
}

std::vector<PersonId> step_transmission(const DaySnapshot& day, int today,
                                        std::span<PersonState> states,
                                        const DiseaseParams& params,
                                        const InfectiousnessProfile& profile, Rng& rng,
                                        PersonId seed_person, int* seed_secondary,
                                        std::vector<TransmissionEvent>* events) {
    // staged exposures: a person exposed today neither transmits nor
    // changes compartment until all of today's edges are processed
    std::vector<PersonId> newly;
    std::vector<PersonId> attributed; // parallel to newly, only when events wanted

    auto try_infect = [&](PersonId source, PersonId target, std::uint32_t duration) {
        const PersonState& src = states[source];
        PersonState& dst = states[target];
        if (!src.infectious_now() || dst.compartment != Compartment::S) return;
        const double q =
            transmission_probability(duration, today - src.onset_day, params, profile);
        if (q <= 0.0 || uniform01(rng) >= q) return;
        const bool from_seed = source == seed_person;
        if (from_seed && seed_secondary) ++*seed_secondary;
        auto it = std::find(newly.begin(), newly.end(), target);
        if (it == newly.end()) {
            newly.push_back(target);
            attributed.push_back(source);
        } else if (from_seed) {
            attributed[static_cast<std::size_t>(it - newly.begin())] = source;
        }
    };

    for (const auto& c : day.contacts()) {
        try_infect(c.a, c.b, c.duration);
        try_infect(c.b, c.a, c.duration);
    }

    for (std::size_t i = 0; i < newly.size(); ++i) {
        PersonState& s = states[newly[i]];
        s.compartment = Compartment::E;
        s.exposure_day = today;
        s.onset_day = today + sample_incubation(params, rng);
        s.asymptomatic = uniform01(rng) < params.asymptomatic_ratio;
        if (events) events->push_back({attributed[i], newly[i], today});
    }
    std::sort(newly.begin(), newly.end());
    return newly;
}

std::vector<PersonId> step_progression(int today, std::span<PersonState> states,
                                       const DiseaseParams& params, Rng& rng) {
    std::vector<PersonId> recovered;
    for (PersonId id = 0; id < states.size(); ++id) {
        PersonState& s = states[id];
        if (s.compartment == Compartment::I) {
            // recovery draws start the day after onset; anyone already I
            // has onset_day < today
            if (uniform01(rng) < params.lambda) {
                s.compartment = Compartment::R;
                s.recovery_day = today;
                recovered.push_back(id);
            }
        } else if (s.compartment == Compartment::E && s.onset_day == today) {
            s.compartment = Compartment::I;
        }
    }
    return recovered;
}

PendingTest administer_test(PersonId person, int day, std::span<const PersonState> states,
                            const DiseaseParams& params, const TestSensitivity& sens, Rng& rng) {
    const PersonState& s = states[person];
    PendingTest test;
    test.person = person;
    test.sample_day = day;
    test.delivery_day = day + params.result_delay_days;
    test.positive = false;
    if (s.infectious_now()) // no false positives: S and R always test negative
        test.positive = uniform01(rng) < sens.sensitivity(day - s.onset_day);
    return test;
}

} // namespace ctsim
