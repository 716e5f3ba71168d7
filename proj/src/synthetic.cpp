#include "ctsim/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "ctsim/errors.hpp"

namespace ctsim {

namespace {

struct RawRecord {
    std::int64_t ts;
    std::uint32_t a, b;
    std::uint32_t class_a, class_b;
};

// day-to-day activity modulation, loosely matching how school weeks vary
constexpr double kDayActivity[] = {1.00, 0.93, 0.86, 1.04, 0.95, 1.00, 0.89};

// calendar offsets: Mon..Fri, then Mon/Tue of the following week
constexpr int kDayOffsets[] = {0, 1, 2, 3, 4, 7, 8};

std::uint32_t draw_duration(double log_mu, double log_sigma, std::uint32_t cap, Rng& rng) {
    std::lognormal_distribution<double> dist(log_mu, log_sigma);
    double d = dist(rng);
    auto units = static_cast<std::uint32_t>(std::llround(d));
    if (units < 1) units = 1;
    if (units > cap) units = cap;
    return units;
}

} // namespace

void write_synthetic_log(std::ostream& out, const SyntheticConfig& cfg) {
    if (cfg.students < 2 || cfg.classes == 0 || cfg.days == 0)
        throw config_error("synthetic generator needs >= 2 students, >= 1 class and day");
    if (cfg.days > std::size(kDayOffsets))
        throw config_error("synthetic generator supports at most 7 days");

    Rng rng(cfg.seed);
    const std::uint32_t n = cfg.students;
    const std::uint32_t class_size = (n + cfg.classes - 1) / cfg.classes;
    auto class_of = [&](std::uint32_t s) { return s / class_size; };

    // persistent friendships: each student picks friends_per_student
    // classmates; the undirected union is the friend set
    std::vector<std::pair<std::uint32_t, std::uint32_t>> friends;
    for (std::uint32_t s = 0; s < n; ++s) {
        const std::uint32_t cls = class_of(s);
        const std::uint32_t lo = cls * class_size;
        const std::uint32_t hi = std::min(n, lo + class_size);
        if (hi - lo < 2) continue;
        for (int f = 0; f < cfg.friends_per_student; ++f) {
            std::uniform_int_distribution<std::uint32_t> pick(lo, hi - 2);
            std::uint32_t other = pick(rng);
            if (other >= s) ++other;
            friends.emplace_back(std::min(s, other), std::max(s, other));
        }
    }
    std::sort(friends.begin(), friends.end());
    friends.erase(std::unique(friends.begin(), friends.end()), friends.end());
    std::vector<std::uint8_t> is_friend_pair(static_cast<std::size_t>(n) * n, 0);
    for (auto [a, b] : friends) is_friend_pair[static_cast<std::size_t>(a) * n + b] = 1;

    const int school_start = 8 * 3600;      // 08:00
    const int school_slots = 9 * 180;       // 9 hours of 20-second slots

    std::vector<RawRecord> records;
    for (std::uint32_t di = 0; di < cfg.days; ++di) {
        const double activity = kDayActivity[di];
        const std::int64_t day_base =
            static_cast<std::int64_t>(kDayOffsets[di]) * 86400 + school_start;

        auto emit_pair = [&](std::uint32_t a, std::uint32_t b, double log_mu, double log_sigma) {
            std::uint32_t d = draw_duration(log_mu, log_sigma, cfg.max_duration, rng);
            if (d > static_cast<std::uint32_t>(school_slots)) d = school_slots;
            std::uniform_int_distribution<int> start(0, school_slots - static_cast<int>(d));
            const int s0 = start(rng);
            for (std::uint32_t k = 0; k < d; ++k)
                records.push_back({day_base + (s0 + static_cast<int>(k)) * 20LL, a, b,
                                   class_of(a), class_of(b)});
        };

        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = a + 1; b < n; ++b) {
                const bool same_class = class_of(a) == class_of(b);
                double prob;
                double mu, sigma;
                if (same_class && is_friend_pair[static_cast<std::size_t>(a) * n + b]) {
                    prob = cfg.friend_contact_prob;
                    mu = cfg.friend_log_mu;
                    sigma = cfg.friend_log_sigma;
                } else if (same_class) {
                    prob = cfg.casual_contact_prob;
                    mu = cfg.casual_log_mu;
                    sigma = cfg.casual_log_sigma;
                } else {
                    prob = cfg.cross_contact_prob;
                    mu = cfg.cross_log_mu;
                    sigma = cfg.cross_log_sigma;
                }
                if (uniform01(rng) < prob * activity) emit_pair(a, b, mu, sigma);
            }
        }
    }

    std::stable_sort(records.begin(), records.end(), [](const RawRecord& x, const RawRecord& y) {
        if (x.ts != y.ts) return x.ts < y.ts;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    // raw ids are offset and strided to exercise the loader's remapping
    for (const auto& r : records)
        out << r.ts << ' ' << (650 + 3 * r.a) << ' ' << (650 + 3 * r.b) << " C" << r.class_a
            << " C" << r.class_b << '\n';
}

TemporalContactGraph make_synthetic_graph(const SyntheticConfig& cfg) {
    std::stringstream buf;
    write_synthetic_log(buf, cfg);
    return load_contact_graph(buf);
}

} // namespace ctsim
