#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ctsim/rng.hpp"
#include "ctsim/temporal_net.hpp"

namespace ctsim {

enum class Compartment : std::uint8_t { S, E, I, R };

struct DiseaseParams {
    double p = 0.10;                          // per-20s infectivity multiplier of ID(t)
    double lambda = 0.11;                     // daily recovery probability after onset
    double incubation_mu = 1.621;             // log-normal incubation parameters
    double incubation_sigma = 0.418;
    double asymptomatic_ratio = 0.40;
    double daily_symptomatic_test_prob = 0.19;
    int result_delay_days = 1;

    void validate() const; // throws config_error
};

/// Relative infectiousness by day offset from symptom onset, ID(t).
/// Support runs from `start_offset` (default -5) over `weights.size()` days;
/// weights are normalized to sum to 1. The default table is a discretized
/// gamma curve peaking one day before onset whose six largest daily values
/// average 0.11.
class InfectiousnessProfile {
public:
    InfectiousnessProfile(int start_offset, std::vector<double> weights);
    static InfectiousnessProfile default_profile();

    double value(int day_offset) const {
        int idx = day_offset - start_offset_;
        if (idx < 0 || idx >= static_cast<int>(weights_.size())) return 0.0;
        return weights_[static_cast<std::size_t>(idx)];
    }
    int start_offset() const { return start_offset_; }
    int end_offset() const { return start_offset_ + static_cast<int>(weights_.size()) - 1; }
    std::span<const double> weights() const { return weights_; }

    /// Mean of the six largest daily values (the paper's ID-hat).
    double top_six_mean() const;

private:
    int start_offset_;
    std::vector<double> weights_;
};

/// RT-PCR false-negative rate by day offset from symptom onset. Values are
/// tabulated per offset from `start_offset`; offsets below the table clamp
/// to the first entry (1.0, i.e. zero sensitivity before infectiousness)
/// and offsets above clamp to the last entry.
class TestSensitivity {
public:
    TestSensitivity(int start_offset, std::vector<double> false_negative);
    static TestSensitivity default_schedule();

    double false_negative(int day_offset) const {
        int idx = day_offset - start_offset_;
        if (idx < 0) idx = 0;
        if (idx >= static_cast<int>(table_.size())) idx = static_cast<int>(table_.size()) - 1;
        return table_[static_cast<std::size_t>(idx)];
    }
    double sensitivity(int day_offset) const { return 1.0 - false_negative(day_offset); }
    int start_offset() const { return start_offset_; }
    std::span<const double> table() const { return table_; }

private:
    int start_offset_;
    std::vector<double> table_;
};

constexpr std::int32_t kNoDay = -1;

struct PersonState {
    Compartment compartment = Compartment::S;
    bool asymptomatic = false;
    bool app_user = false;
    bool in_quarantine = false;
    std::int32_t exposure_day = kNoDay;       // E_v
    std::int32_t onset_day = kNoDay;          // I_v (fixed at exposure)
    std::int32_t recovery_day = kNoDay;       // R_v
    std::int32_t first_positive_day = kNoDay; // T_v: day the first positive result arrived

    bool infected_ever() const { return compartment != Compartment::S; }
    bool infectious_now() const {
        return compartment == Compartment::E || compartment == Compartment::I;
    }
    bool confirmed() const { return first_positive_day != kNoDay; }
};

/// A test taken on `sample_day`; the outcome is fixed when the sample is
/// taken and becomes known on `delivery_day`.
struct PendingTest {
    PersonId person = 0;
    std::int32_t sample_day = kNoDay;
    std::int32_t delivery_day = kNoDay;
    bool positive = false;
};

/// Incubation period: round(exp(N(mu, sigma))), clamped to >= 1 day.
int sample_incubation(const DiseaseParams& params, Rng& rng);

/// Probability that one contact of `duration` 20-second units with an
/// infected person at the given onset offset transmits: 1-(1-p*ID(t))^d.
double transmission_probability(std::uint32_t duration, int day_offset,
                                const DiseaseParams& params,
                                const InfectiousnessProfile& profile);

/// Per-transmission record kept when distribution collection is enabled.
struct TransmissionEvent {
    PersonId infector = 0;
    PersonId infectee = 0;
    std::int32_t day = kNoDay;
};

/// Runs one day of transmission over an effective (post-modifier) day
/// graph: every S endpoint of an edge whose other endpoint is E or I is
/// exposed with the per-edge transmission probability; draws are
/// independent per edge. Newly exposed persons get exposure_day = today,
/// a sampled incubation fixing onset_day, and an asymptomatic draw. They
/// do not transmit until the next day.
///
/// Returns newly exposed ids (ascending). When `seed_person` is valid, the
/// count of exposures whose Bernoulli draw on an edge to the seed
/// succeeded is added to `*seed_secondary`. When `events` is non-null an
/// attributed infector is recorded per exposure (the seed when its draw
/// succeeded, otherwise the first successful edge in neighbor order).
std::vector<PersonId> step_transmission(const DaySnapshot& day, int today,
                                        std::span<PersonState> states,
                                        const DiseaseParams& params,
                                        const InfectiousnessProfile& profile, Rng& rng,
                                        PersonId seed_person = UINT32_MAX,
                                        int* seed_secondary = nullptr,
                                        std::vector<TransmissionEvent>* events = nullptr);

/// E -> I when today reaches onset_day; each person infectious since before
/// today recovers with probability lambda (recovery draws begin the day
/// after onset). Returns ids recovered today (ascending).
std::vector<PersonId> step_progression(int today, std::span<PersonState> states,
                                       const DiseaseParams& params, Rng& rng);

/// Takes a sample from `person` on `day`. The outcome is positive with
/// probability sensitivity(day - onset_day) while the person is E or I and
/// always negative otherwise (no false positives). The caller owns
/// delivery scheduling at sample_day + result_delay_days.
PendingTest administer_test(PersonId person, int day, std::span<const PersonState> states,
                            const DiseaseParams& params, const TestSensitivity& sens, Rng& rng);

} // namespace ctsim
