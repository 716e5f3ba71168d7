#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ctsim/rng.hpp"

namespace ctsim {

using PersonId = std::uint32_t;

/// One raw proximity record: the two badges were in contact during the
/// 20-second interval ending at `timestamp`.
struct ContactEvent {
    std::int64_t timestamp = 0; // seconds
    PersonId person_a = 0;
    PersonId person_b = 0;
};

/// Aggregated contact between a canonical pair (a < b) on one day.
/// Durations are cumulative over the day, in 20-second units.
struct DayContact {
    PersonId a = 0;
    PersonId b = 0;
    std::uint32_t duration = 0;
};

/// Symmetric sparse pair -> duration map for a single day. Stored as a
/// vector of canonical contacts sorted by (a, b); immutable once built.
class DaySnapshot {
public:
    DaySnapshot() = default;

    /// Canonicalizes (a < b), sorts and validates. Throws config_error on
    /// self-pairs, duplicate pairs or zero durations.
    static DaySnapshot from_contacts(std::vector<DayContact> contacts);

    /// Duration between i and j (order-insensitive); 0 when not in contact.
    std::uint32_t duration(PersonId i, PersonId j) const;

    std::span<const DayContact> contacts() const { return contacts_; }
    std::size_t edge_count() const { return contacts_.size(); }
    bool empty() const { return contacts_.empty(); }

    /// Sum of vertex degrees / number of distinct persons with at least one
    /// contact is handled by callers; this returns 2*edges for convenience.
    std::size_t degree_sum() const { return 2 * contacts_.size(); }

private:
    std::vector<DayContact> contacts_; // sorted by (a, b), a < b, duration >= 1
    friend DaySnapshot synthesize_day(std::span<const DaySnapshot>, Rng&);
    friend DaySnapshot effective_day(const DaySnapshot&, std::span<const std::uint8_t>,
                                     std::span<const double>);
};

/// A population plus its per-day contact snapshots. `base_days` holds the
/// empirical (or extended) days that daily synthesis draws from.
struct TemporalContactGraph {
    std::uint32_t population = 0;
    std::vector<DaySnapshot> base_days;

    /// Mean per-day vertex degree (2E/N averaged over base days).
    double mean_daily_degree() const;
};

/// Parses a whitespace-separated proximity log (`timestamp id_a id_b`,
/// extra trailing columns ignored), partitions records into calendar days
/// and aggregates 20-second records into per-day pair durations. Person
/// ids are remapped to 0..n-1 in ascending order of the raw ids.
///
/// Throws parse_error (with line number) on malformed lines, self-contact
/// records or non-ascending timestamps.
std::vector<DaySnapshot> load_contact_data(std::istream& in);

/// load_contact_data plus population bookkeeping.
TemporalContactGraph load_contact_graph(std::istream& in);

/// Generates one synthetic day: picks two distinct base days a, b and,
/// starting from day a, replaces each pair duration with day b's value
/// with probability 0.5 (absent counts as zero and removes the edge).
/// Requires at least 2 base days.
DaySnapshot synthesize_day(std::span<const DaySnapshot> base_days, Rng& rng);

/// Grows the population one vertex at a time up to `target_n`. Each new
/// vertex v copies, for every existing vertex w, the whole per-day weight
/// series of (u, w) for a uniformly random existing u != w; afterwards each
/// edge series that existed before the insertion is dropped entirely with
/// probability 1/(n-1), n being the vertex count just before the insertion.
/// Preserves the mean vertex degree in expectation.
TemporalContactGraph extend_graph(const TemporalContactGraph& graph, std::uint32_t target_n,
                                  Rng& rng);

/// Applies quarantine and contact-reduction modifiers to a physical day:
/// edges touching a quarantined person are removed, other durations are
/// scaled by the smaller endpoint factor and rounded half away from zero
/// (edges rounding to zero are removed). `quarantined` and `reduction`
/// are indexed by person id; `reduction` entries must lie in (0, 1].
DaySnapshot effective_day(const DaySnapshot& day, std::span<const std::uint8_t> quarantined,
                          std::span<const double> reduction);

} // namespace ctsim
