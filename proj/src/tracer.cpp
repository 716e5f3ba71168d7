#include "ctsim/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_map>

#include "ctsim/errors.hpp"

namespace ctsim {

namespace {
constexpr std::int32_t kNeverReported = INT32_MAX;
constexpr std::size_t kWeightTableSize = 2048;
} // namespace

void TraceParams::validate() const {
    if (p_prime <= 0.0 || p_prime >= 1.0) throw config_error("p_prime must lie in (0,1)");
    if (cutoff <= 0.0 || cutoff > 1.0) throw config_error("cutoff must lie in (0,1]");
    if (window < 1) throw config_error("window must be >= 1");
    if (max_degree < 1) throw config_error("max_degree must be >= 1");
    if (followup_interval < 1) throw config_error("followup interval must be >= 1");
    if (second_degree_factor <= 0.0 || second_degree_factor > 1.0 ||
        third_degree_factor <= 0.0 || third_degree_factor > 1.0)
        throw config_error("notification factors must lie in (0,1]");
}

ContactTracer::ContactTracer(std::uint32_t population, int horizon_days,
                             const TraceParams& params, int history_days)
    : params_(params),
      population_(population),
      levels_(static_cast<std::size_t>(params.max_degree)),
      days_(static_cast<std::size_t>(horizon_days) + 1),
      history_days_(history_days) {
    params_.validate();
    if (history_days_ < params_.window + 2)
        throw config_error("tracer history must cover the recall window");
    app_user_.assign(population_, 0);
    matrix_.assign(static_cast<std::size_t>(population_) * levels_ * days_, 0.0);
    window_.assign(static_cast<std::size_t>(population_) * levels_, 0.0);
    status_.assign(population_, DegreeStatus{});
    positive_reported_.assign(population_, 0);
    positive_sample_day_.assign(population_, kNeverReported);
    recovery_reported_day_.assign(population_, kNeverReported);
    ring_.resize(static_cast<std::size_t>(history_days_));
    weight_table_.resize(kWeightTableSize);
    for (std::size_t d = 0; d < kWeightTableSize; ++d)
        weight_table_[d] = 1.0 - std::pow(1.0 - params_.p_prime, static_cast<double>(d));
}

void ContactTracer::reset(std::span<const std::uint8_t> app_user_flags) {
    if (app_user_flags.size() != population_)
        throw config_error("app-user flag vector size mismatch");
    std::copy(app_user_flags.begin(), app_user_flags.end(), app_user_.begin());
    if (any_report_) std::fill(matrix_.begin(), matrix_.end(), 0.0);
    std::fill(window_.begin(), window_.end(), 0.0);
    std::fill(status_.begin(), status_.end(), DegreeStatus{});
    std::fill(positive_reported_.begin(), positive_reported_.end(), 0);
    std::fill(positive_sample_day_.begin(), positive_sample_day_.end(), kNeverReported);
    std::fill(recovery_reported_day_.begin(), recovery_reported_day_.end(), kNeverReported);
    quarantine_.clear();
    pending_reports_.clear();
    for (auto& slot : ring_) {
        slot.day = -1;
        slot.contacts.clear();
    }
    any_report_ = false;
    last_update_day_ = -1;
}

double ContactTracer::chain_weight(std::uint32_t duration) const {
    if (duration < kWeightTableSize) return weight_table_[duration];
    return 1.0 - std::pow(1.0 - params_.p_prime, static_cast<double>(duration));
}

ContactTracer::DayLog* ContactTracer::log_for(int day) {
    if (day < 0) return nullptr;
    DayLog& slot = ring_[static_cast<std::size_t>(day % history_days_)];
    return slot.day == day ? &slot : nullptr;
}

const ContactTracer::DayLog* ContactTracer::log_for(int day) const {
    if (day < 0) return nullptr;
    const DayLog& slot = ring_[static_cast<std::size_t>(day % history_days_)];
    return slot.day == day ? &slot : nullptr;
}

void ContactTracer::report_positive(PersonId person, int sample_day) {
    if (!app_user_[person]) return; // non-users have nothing to report
    if (positive_reported_[person]) return;
    pending_reports_.emplace_back(person, sample_day);
}

void ContactTracer::report_recovery(PersonId person, int day) {
    if (!positive_reported_[person]) return; // only tested-positive users report recovery
    if (recovery_reported_day_[person] != kNeverReported) return;
    recovery_reported_day_[person] = day;
}

void ContactTracer::record_contacts(const DaySnapshot& effective_day, int day) {
    DayLog& slot = ring_[static_cast<std::size_t>(day % history_days_)];
    slot.day = day;
    slot.contacts.clear();
    for (const auto& c : effective_day.contacts())
        if (app_user_[c.a] && app_user_[c.b]) slot.contacts.push_back({c.a, c.b, day, c.duration});

    // CSR adjacency over the day's contacts, both directions
    slot.index.assign(population_ + 1, 0);
    for (const auto& c : slot.contacts) {
        ++slot.index[c.a + 1];
        ++slot.index[c.b + 1];
    }
    for (std::size_t i = 1; i < slot.index.size(); ++i) slot.index[i] += slot.index[i - 1];
    slot.adjacency.resize(slot.contacts.size() * 2);
    std::vector<std::uint32_t> cursor(slot.index.begin(), slot.index.end() - 1);
    for (const auto& c : slot.contacts) {
        slot.adjacency[cursor[c.a]++] = {c.b, c.duration};
        slot.adjacency[cursor[c.b]++] = {c.a, c.duration};
    }
}

std::span<const AppContact> ContactTracer::contacts_on(int day) const {
    const DayLog* log = log_for(day);
    if (!log) return {};
    return log->contacts;
}

void ContactTracer::drain_reports(int current_day) {
    if (pending_reports_.empty()) return;
    any_report_ = true;

    // level-1 deltas from retroactive seeding over each recall window
    std::unordered_map<std::uint64_t, double> cur, next;
    auto key = [this](PersonId p, int t) {
        return static_cast<std::uint64_t>(p) * days_ + static_cast<std::uint64_t>(t);
    };

    for (auto [person, sample_day] : pending_reports_) {
        if (positive_reported_[person]) continue; // duplicate reports are ignored
        positive_reported_[person] = 1;
        positive_sample_day_[person] = sample_day;
        for (int t1 = std::max(0, sample_day - params_.window); t1 <= sample_day; ++t1) {
            const DayLog* log = log_for(t1);
            if (!log) continue;
            if (recovered_by(person, t1)) continue;
            for (std::uint32_t k = log->index[person]; k < log->index[person + 1]; ++k) {
                const auto [partner, duration] = log->adjacency[k];
                if (recovered_by(partner, t1)) continue;
                const double w = chain_weight(duration);
                m_entry(partner, 1, t1) += w;
                cur[key(partner, t1)] += w;
            }
        }
    }
    pending_reports_.clear();

    // propagate the new mass through the already-computed days of each
    // higher level; days >= current_day are produced later by finalize_day
    for (int level = 2; level <= params_.max_degree && !cur.empty(); ++level) {
        next.clear();
        for (const auto& [k, delta] : cur) {
            const PersonId s = static_cast<PersonId>(k / days_);
            const int t_prev = static_cast<int>(k % days_);
            const int last = std::min(t_prev + params_.window, current_day - 1);
            for (int u = t_prev + 1; u <= last; ++u) {
                const DayLog* log = log_for(u);
                if (!log) continue;
                if (recovered_by(s, u)) continue;
                for (std::uint32_t j = log->index[s]; j < log->index[s + 1]; ++j) {
                    const auto [partner, duration] = log->adjacency[j];
                    if (recovered_by(partner, u)) continue;
                    const double d = chain_weight(duration) * delta;
                    m_entry(partner, level, u) += d;
                    if (level < params_.max_degree) next[key(partner, u)] += d;
                }
            }
        }
        std::swap(cur, next);
    }
}

void ContactTracer::compute_window_sums(int day) {
    std::fill(window_.begin(), window_.end(), 0.0);
    if (!any_report_) return;
    const int first = std::max(0, day - params_.window);
    for (PersonId p = 0; p < population_; ++p) {
        if (!app_user_[p]) continue;
        for (int l = 1; l <= params_.max_degree; ++l) {
            double sum = 0.0;
            for (int t = first; t <= day - 1; ++t) sum += m_entry(p, l, t);
            window_[static_cast<std::size_t>(p) * levels_ + (l - 1)] = sum;
        }
    }
}

void ContactTracer::classify_all(int day) {
    quarantine_.clear();
    for (PersonId p = 0; p < population_; ++p) {
        if (!app_user_[p]) continue;
        int degree = 0;
        double cumulative = 0.0;
        for (int k = 1; k <= params_.max_degree; ++k) {
            cumulative += window_[static_cast<std::size_t>(p) * levels_ + (k - 1)];
            if (cumulative >= params_.cutoff) {
                degree = k;
                break;
            }
        }
        if (status_[p].degree != degree) status_[p] = {degree, day};
        if (degree == 1 && recovery_reported_day_[p] == kNeverReported)
            quarantine_.push_back(p);
    }
}

void ContactTracer::update_day(int day) {
    drain_reports(day);
    compute_window_sums(day);
    classify_all(day);
    last_update_day_ = day;
}

void ContactTracer::finalize_day(int day) {
    if (!any_report_) return;
    const DayLog* log = log_for(day);
    if (!log || log->contacts.empty()) return;
    for (const auto& c : log->contacts) {
        if (recovered_by(c.a, day) || recovered_by(c.b, day)) continue;
        const double w = chain_weight(c.duration);
        for (int l = 2; l <= params_.max_degree; ++l) {
            const std::size_t off = static_cast<std::size_t>(l - 2);
            m_entry(c.a, l, day) += w * window_[static_cast<std::size_t>(c.b) * levels_ + off];
            m_entry(c.b, l, day) += w * window_[static_cast<std::size_t>(c.a) * levels_ + off];
        }
    }
}

std::vector<PersonId> ContactTracer::followup_test_set(int day) const {
    std::vector<PersonId> due;
    for (PersonId p = 0; p < population_; ++p) {
        if (!app_user_[p] || positive_reported_[p]) continue;
        const DegreeStatus& st = status_[p];
        if (st.degree < 1 || st.degree > params_.max_degree) continue;
        if ((day - st.since_day) % params_.followup_interval == 0) due.push_back(p);
    }
    return due;
}

std::size_t ContactTracer::notification_factors(std::span<double> factors) const {
    std::size_t count = 0;
    for (PersonId p = 0; p < population_; ++p) {
        if (!app_user_[p]) continue;
        if (recovery_reported_day_[p] != kNeverReported) continue;
        double f = 1.0;
        if (status_[p].degree == 2)
            f = params_.second_degree_factor;
        else if (status_[p].degree == 3)
            f = params_.third_degree_factor;
        else
            continue;
        factors[p] = f;
        ++count;
    }
    return count;
}

double ContactTracer::matrix(PersonId person, int degree, int day) const {
    if (degree < 1 || degree > params_.max_degree) throw config_error("degree out of range");
    if (day < 0 || day >= static_cast<int>(days_)) throw config_error("day out of range");
    return m_entry(person, degree, day);
}

double ContactTracer::window_sum(PersonId person, int max_degree, int day) const {
    double sum = 0.0;
    const int first = std::max(0, day - params_.window);
    for (int l = 1; l <= std::min(max_degree, params_.max_degree); ++l)
        for (int t = first; t <= day - 1; ++t) sum += m_entry(person, l, t);
    return sum;
}

void ContactTracer::dump_status_csv(std::ostream& out, int day) const {
    out << "person,degree,window_sum\n";
    for (PersonId p = 0; p < population_; ++p) {
        if (!app_user_[p]) continue;
        out << p << ',' << status_[p].degree << ','
            << window_sum(p, params_.max_degree, day) << '\n';
    }
}

} // namespace ctsim
