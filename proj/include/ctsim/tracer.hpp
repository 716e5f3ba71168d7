#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ctsim/temporal_net.hpp"

namespace ctsim {

struct TraceParams {
    double p_prime = 0.011;           // estimated per-unit transmission probability ID-hat * p
    double cutoff = 0.10;             // C: cumulative chain weight needed to flag a contact
    int window = 10;                  // W: recall / serial-interval window in days
    int max_degree = 3;               // L: deepest tracked contact degree
    int followup_interval = 3;        // days between follow-up tests of flagged contacts
    double second_degree_factor = 0.25;
    double third_degree_factor = 0.50;

    void validate() const; // throws config_error
};

/// A contact visible to the app: both parties are registered users.
struct AppContact {
    PersonId a = 0;
    PersonId b = 0;
    int day = 0;
    std::uint32_t duration = 0; // 20-second units
};

struct DegreeStatus {
    int degree = 0;    // 1..L, or 0 for none
    int since_day = 0; // first day the current status has held
};

/// The contact-tracing app. Sees only contacts between app users, ingests
/// positive-test and recovery reports, and maintains for every person the
/// exposure matrix M[l][t]: the total weight of qualifying contact chains
/// of length l whose last contact happened on day t. A chain starts at a
/// person with a reported positive test (its first contact lying within
/// the `window` days before the test), steps through contacts separated by
/// 1..window days, skips contacts involving anyone who had reported
/// recovery by the contact day, and weighs each contact by
/// 1-(1-p')^duration.
///
/// Degree-1 entries are seeded retroactively when a positive test is
/// reported; entries of higher degree are maintained with the recursion
///   M[i][l][t] = sum_s (1-(1-p')^{d_s}) * sum_{r=1..W} M[s][l-1][t-r]
/// over day-t contacts (i, s, d_s), with retroactive seeds propagated as
/// deltas through already-computed days so that the matrix always equals
/// the full chain enumeration over everything reported so far.
class ContactTracer {
public:
    /// `history_days` bounds how far back retroactive updates can reach
    /// (recall window + result delay + 1 is sufficient); the contact log
    /// keeps only that many trailing days.
    ContactTracer(std::uint32_t population, int horizon_days, const TraceParams& params,
                  int history_days);

    /// Clears all state (matrices, logs, statuses) for a fresh trial.
    void reset(std::span<const std::uint8_t> app_user_flags);

    /// Queues a positive report; applied (idempotently) by update_day.
    /// `sample_day` anchors the recall window.
    void report_positive(PersonId person, int sample_day);

    /// A previously positive-reported user announces recovery; chains stop
    /// extending through their later contacts.
    void report_recovery(PersonId person, int day);

    /// Start-of-day update: drains queued positive reports (retroactively
    /// seeding degree-1 mass and patching dependent higher-degree entries),
    /// recomputes rolling window sums for `day`, and reclassifies every
    /// app user's contact degree.
    void update_day(int day);

    /// Logs all app-user/app-user edges of the effective day graph.
    void record_contacts(const DaySnapshot& effective_day, int day);

    /// End-of-day recursion: computes M[l][day] for l = 2..L from the
    /// contacts recorded for `day`.
    void finalize_day(int day);

    // --- queries (valid after update_day for the same day) ---

    /// Smallest degree k whose cumulative window sum meets the cutoff.
    DegreeStatus degree_status(PersonId person) const { return status_[person]; }

    /// App users currently classified degree-1 (recovery-reported users
    /// excluded): the tracer-driven quarantine set.
    const std::vector<PersonId>& quarantine_candidates() const { return quarantine_; }

    /// Flagged users (degree 1..L) due for a follow-up test on `day`:
    /// (day - since_day) % followup_interval == 0. Positive-reported users
    /// are excluded.
    std::vector<PersonId> followup_test_set(int day) const;

    /// Pre-exposure notification factors for the current day: degree-2
    /// users map to second_degree_factor, degree-3 users (when L >= 3) to
    /// third_degree_factor. Writes into `factors` (indexed by person, 1.0
    /// meaning no reduction) and returns the number of entries set.
    std::size_t notification_factors(std::span<double> factors) const;

    /// Exposure matrix entry M[person][degree][day]; degree in 1..L.
    double matrix(PersonId person, int degree, int day) const;

    /// Cumulative window sum over degrees 1..k used by classification.
    double window_sum(PersonId person, int max_degree, int day) const;

    bool has_reported_positive(PersonId person) const { return positive_reported_[person] != 0; }
    std::span<const AppContact> contacts_on(int day) const;

    /// Debug dump: one `person,degree,window_sum` row per app user.
    void dump_status_csv(std::ostream& out, int day) const;

private:
    struct DayLog {
        int day = -1;
        std::vector<AppContact> contacts;        // as recorded
        std::vector<std::uint32_t> index;        // CSR offsets per person
        std::vector<std::pair<PersonId, std::uint32_t>> adjacency; // (partner, duration)
    };

    double chain_weight(std::uint32_t duration) const;
    bool recovered_by(PersonId person, int day) const {
        return recovery_reported_day_[person] <= day;
    }
    DayLog* log_for(int day);
    const DayLog* log_for(int day) const;
    void drain_reports(int current_day);
    void compute_window_sums(int day);
    void classify_all(int day);

    double& m_entry(PersonId person, int degree, int day) {
        return matrix_[(static_cast<std::size_t>(person) * levels_ + (degree - 1)) * days_ + day];
    }
    double m_entry(PersonId person, int degree, int day) const {
        return matrix_[(static_cast<std::size_t>(person) * levels_ + (degree - 1)) * days_ + day];
    }

    TraceParams params_;
    std::uint32_t population_ = 0;
    std::size_t levels_ = 3;
    std::size_t days_ = 0; // horizon + 1
    int history_days_ = 0;

    std::vector<std::uint8_t> app_user_;
    std::vector<double> matrix_;       // person x level x day
    std::vector<double> window_;       // person x level, rolling sums for current day
    std::vector<DegreeStatus> status_;
    std::vector<PersonId> quarantine_;
    std::vector<std::uint8_t> positive_reported_;
    std::vector<std::int32_t> positive_sample_day_;
    std::vector<std::int32_t> recovery_reported_day_;
    std::vector<std::pair<PersonId, std::int32_t>> pending_reports_;
    std::vector<DayLog> ring_;
    std::vector<double> weight_table_; // chain_weight for small durations
    bool any_report_ = false;          // all-zero matrix fast path until first report
    int last_update_day_ = -1;
};

} // namespace ctsim
