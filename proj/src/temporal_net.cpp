#include "ctsim/temporal_net.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <string>
#include <unordered_map>
#include <utility>

#include "ctsim/errors.hpp"

namespace ctsim {

namespace {

inline std::uint64_t pair_key(PersonId a, PersonId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

DaySnapshot DaySnapshot::from_contacts(std::vector<DayContact> contacts) {
    for (auto& c : contacts) {
        if (c.a == c.b) throw config_error("self-contact in day snapshot");
        if (c.duration == 0) throw config_error("zero duration in day snapshot");
        if (c.a > c.b) std::swap(c.a, c.b);
    }
    std::sort(contacts.begin(), contacts.end(),
              [](const DayContact& x, const DayContact& y) {
                  return x.a != y.a ? x.a < y.a : x.b < y.b;
              });
    for (std::size_t i = 1; i < contacts.size(); ++i) {
        if (contacts[i - 1].a == contacts[i].a && contacts[i - 1].b == contacts[i].b)
            throw config_error("duplicate pair in day snapshot");
    }
    DaySnapshot snap;
    snap.contacts_ = std::move(contacts);
    return snap;
}

std::uint32_t DaySnapshot::duration(PersonId i, PersonId j) const {
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(contacts_.begin(), contacts_.end(), std::make_pair(i, j),
                               [](const DayContact& c, const std::pair<PersonId, PersonId>& k) {
                                   return c.a != k.first ? c.a < k.first : c.b < k.second;
                               });
    if (it != contacts_.end() && it->a == i && it->b == j) return it->duration;
    return 0;
}

double TemporalContactGraph::mean_daily_degree() const {
    if (base_days.empty() || population == 0) return 0.0;
    double total = 0.0;
    for (const auto& day : base_days) total += static_cast<double>(day.degree_sum());
    return total / (static_cast<double>(base_days.size()) * population);
}

std::vector<DaySnapshot> load_contact_data(std::istream& in) {
    struct RawRecord {
        std::int64_t day_bucket;
        PersonId a, b;
    };
    std::vector<RawRecord> records;
    std::vector<PersonId> raw_ids;

    std::string line;
    long line_no = 0;
    std::int64_t prev_ts = 0;
    bool have_prev = false;
    while (std::getline(in, line)) {
        ++line_no;
        const char* s = line.c_str();
        char* end = nullptr;
        // skip blank lines
        bool blank = true;
        for (const char* q = s; *q; ++q)
            if (!std::isspace(static_cast<unsigned char>(*q))) { blank = false; break; }
        if (blank) continue;

        errno = 0;
        long long ts = std::strtoll(s, &end, 10);
        if (end == s || errno != 0) throw parse_error("malformed timestamp", line_no);
        s = end;
        long long ida = std::strtoll(s, &end, 10);
        if (end == s) throw parse_error("malformed record: missing id_a", line_no);
        s = end;
        long long idb = std::strtoll(s, &end, 10);
        if (end == s) throw parse_error("malformed record: missing id_b", line_no);
        if (ida < 0 || idb < 0) throw parse_error("negative person id", line_no);
        if (ida == idb) throw parse_error("self-contact record rejected", line_no);
        if (have_prev && ts < prev_ts) throw parse_error("timestamps not ascending", line_no);
        prev_ts = ts;
        have_prev = true;
        // trailing columns (class labels etc.) are ignored

        records.push_back({ts / 86400, static_cast<PersonId>(ida), static_cast<PersonId>(idb)});
        raw_ids.push_back(static_cast<PersonId>(ida));
        raw_ids.push_back(static_cast<PersonId>(idb));
    }
    if (records.empty()) return {};

    // remap raw ids to 0..n-1 in ascending order
    std::sort(raw_ids.begin(), raw_ids.end());
    raw_ids.erase(std::unique(raw_ids.begin(), raw_ids.end()), raw_ids.end());
    std::unordered_map<PersonId, PersonId> remap;
    remap.reserve(raw_ids.size());
    for (std::size_t i = 0; i < raw_ids.size(); ++i)
        remap.emplace(raw_ids[i], static_cast<PersonId>(i));

    const std::int64_t first_bucket = records.front().day_bucket;
    std::vector<DaySnapshot> days;
    std::unordered_map<std::uint64_t, std::uint32_t> acc;
    std::int64_t current_bucket = first_bucket;

    auto flush = [&]() {
        std::vector<DayContact> contacts;
        contacts.reserve(acc.size());
        for (const auto& [key, dur] : acc)
            contacts.push_back({static_cast<PersonId>(key >> 32),
                                static_cast<PersonId>(key & 0xFFFFFFFFu), dur});
        days.push_back(DaySnapshot::from_contacts(std::move(contacts)));
        acc.clear();
    };

    for (const auto& rec : records) {
        if (rec.day_bucket != current_bucket) {
            flush(); // records are time-ordered, so the previous day is complete
            current_bucket = rec.day_bucket;
        }
        PersonId a = remap.at(rec.a);
        PersonId b = remap.at(rec.b);
        if (a > b) std::swap(a, b);
        acc[pair_key(a, b)] += 1; // one record = 20 seconds
    }
    flush();
    return days;
}

TemporalContactGraph load_contact_graph(std::istream& in) {
    TemporalContactGraph graph;
    graph.base_days = load_contact_data(in);
    PersonId max_id = 0;
    for (const auto& day : graph.base_days)
        for (const auto& c : day.contacts()) max_id = std::max(max_id, c.b);
    graph.population = graph.base_days.empty() ? 0 : max_id + 1;
    return graph;
}

DaySnapshot synthesize_day(std::span<const DaySnapshot> base_days, Rng& rng) {
    if (base_days.size() < 2)
        throw config_error("day synthesis needs at least 2 base days");

    std::uniform_int_distribution<std::size_t> pick(0, base_days.size() - 1);
    std::size_t a = pick(rng);
    std::uniform_int_distribution<std::size_t> pick_other(0, base_days.size() - 2);
    std::size_t b = pick_other(rng);
    if (b >= a) ++b;

    const auto day_a = base_days[a].contacts();
    const auto day_b = base_days[b].contacts();

    DaySnapshot out;
    out.contacts_.reserve(day_a.size());
    std::bernoulli_distribution coin(0.5);

    // sorted two-pointer walk over the union of both edge sets
    std::size_t i = 0, j = 0;
    auto less = [](const DayContact& x, const DayContact& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    };
    while (i < day_a.size() || j < day_b.size()) {
        if (j == day_b.size() || (i < day_a.size() && less(day_a[i], day_b[j]))) {
            // only in a: swap to b's (absent) value removes the edge
            if (!coin(rng)) out.contacts_.push_back(day_a[i]);
            ++i;
        } else if (i == day_a.size() || less(day_b[j], day_a[i])) {
            // only in b: swap brings the edge in
            if (coin(rng)) out.contacts_.push_back(day_b[j]);
            ++j;
        } else {
            out.contacts_.push_back(coin(rng) ? day_b[j] : day_a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

TemporalContactGraph extend_graph(const TemporalContactGraph& graph, std::uint32_t target_n,
                                  Rng& rng) {
    if (graph.population == 0 || graph.base_days.empty())
        throw config_error("cannot extend an empty graph");
    if (target_n < graph.population)
        throw config_error("extension target below current population");
    if (target_n == graph.population) return graph;

    const std::size_t n_days = graph.base_days.size();

    struct Series {
        PersonId a, b;
        std::vector<std::uint32_t> durations; // one slot per base day
    };
    std::vector<Series> series;
    std::unordered_map<std::uint64_t, std::size_t> index; // pair -> position in `series`

    for (std::size_t d = 0; d < n_days; ++d) {
        for (const auto& c : graph.base_days[d].contacts()) {
            auto key = pair_key(c.a, c.b);
            auto it = index.find(key);
            if (it == index.end()) {
                it = index.emplace(key, series.size()).first;
                series.push_back({c.a, c.b, std::vector<std::uint32_t>(n_days, 0)});
            }
            series[it->second].durations[d] = c.duration;
        }
    }

    auto erase_series = [&](std::size_t pos) {
        auto key = pair_key(series[pos].a, series[pos].b);
        index.erase(key);
        if (pos != series.size() - 1) {
            series[pos] = std::move(series.back());
            index[pair_key(series[pos].a, series[pos].b)] = pos;
        }
        series.pop_back();
    };

    for (std::uint32_t n = graph.population; n < target_n; ++n) {
        const PersonId v = n; // vertex being added; existing vertices are 0..n-1

        // copy phase: v's edge to each w mirrors a random (u, w) series
        std::vector<Series> fresh;
        std::uniform_int_distribution<PersonId> pick_u(0, n - 2);
        for (PersonId w = 0; w < n; ++w) {
            PersonId u = pick_u(rng);
            if (u >= w) ++u;
            auto it = index.find(pair_key(std::min(u, w), std::max(u, w)));
            if (it == index.end()) continue;
            fresh.push_back({std::min(v, w), std::max(v, w), series[it->second].durations});
        }

        // deletion phase: every pre-existing series dies with probability 1/(n-1)
        std::binomial_distribution<std::size_t> del_count(series.size(), 1.0 / (n - 1));
        std::size_t k = del_count(rng);
        for (std::size_t d = 0; d < k; ++d) {
            std::uniform_int_distribution<std::size_t> pick(0, series.size() - 1);
            erase_series(pick(rng));
        }

        for (auto& s : fresh) {
            index.emplace(pair_key(s.a, s.b), series.size());
            series.push_back(std::move(s));
        }
    }

    TemporalContactGraph out;
    out.population = target_n;
    std::vector<std::vector<DayContact>> per_day(n_days);
    for (const auto& s : series)
        for (std::size_t d = 0; d < n_days; ++d)
            if (s.durations[d] > 0) per_day[d].push_back({s.a, s.b, s.durations[d]});
    out.base_days.reserve(n_days);
    for (auto& contacts : per_day)
        out.base_days.push_back(DaySnapshot::from_contacts(std::move(contacts)));
    return out;
}

DaySnapshot effective_day(const DaySnapshot& day, std::span<const std::uint8_t> quarantined,
                          std::span<const double> reduction) {
    DaySnapshot snap;
    snap.contacts_.reserve(day.edge_count());
    for (const auto& c : day.contacts()) {
        if (c.a < quarantined.size() && quarantined[c.a]) continue;
        if (c.b < quarantined.size() && quarantined[c.b]) continue;
        double factor = 1.0;
        if (c.a < reduction.size()) factor = std::min(factor, reduction[c.a]);
        if (c.b < reduction.size()) factor = std::min(factor, reduction[c.b]);
        if (factor >= 1.0) {
            snap.contacts_.push_back(c);
            continue;
        }
        auto scaled = static_cast<std::uint32_t>(std::llround(c.duration * factor));
        if (scaled > 0) snap.contacts_.push_back({c.a, c.b, scaled});
    }
    // filtering/rescaling a canonical list keeps it canonical
    return snap;
}

} // namespace ctsim
