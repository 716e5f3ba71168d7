#include "ctsim/report.hpp"

#include <ostream>

namespace ctsim {

void write_metrics_csv(std::ostream& out, const AggregateResult& agg) {
    out << "metric,value\n";
    out << "trials," << agg.trials << '\n';
    out << "infected," << agg.mean_infected << '\n';
    out << "quarantine_days_false," << agg.mean_quarantine_false << '\n';
    out << "quarantine_days_true," << agg.mean_quarantine_true << '\n';
    out << "quarantine_days_tested," << agg.mean_quarantine_tested << '\n';
    out << "tests_used," << agg.mean_tests_used << '\n';
    out << "seed_secondary_infections," << agg.mean_seed_secondary << '\n';
}

void write_series_csv(std::ostream& out, const AggregateResult& agg) {
    out << "day,S,E,I,R,Q,T\n";
    for (std::size_t d = 0; d < agg.mean_S.size(); ++d)
        out << d << ',' << agg.mean_S[d] << ',' << agg.mean_E[d] << ',' << agg.mean_I[d] << ','
            << agg.mean_R[d] << ',' << agg.mean_Q[d] << ',' << agg.mean_T[d] << '\n';
}

void write_r0_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve) {
    out << "p,r0\n";
    for (const auto& [p, r0] : curve) out << p << ',' << r0 << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve) {
    out << "app_proportion,infected\n";
    for (const auto& [prop, infected] : curve) out << prop << ',' << infected << '\n';
}

EconRow make_econ_row(int scenario, double app_proportion, double asymptomatic_ratio,
                      const AggregateResult& agg, const AggregateResult& baseline,
                      int n_app_users, const CostModel& model) {
    EconRow row;
    row.scenario = scenario;
    row.app_proportion = app_proportion;
    row.asymptomatic_ratio = asymptomatic_ratio;
    row.infected = agg.mean_infected;
    row.q_false = agg.mean_quarantine_false;
    row.q_true = agg.mean_quarantine_true;
    row.q_tested = agg.mean_quarantine_tested;
    row.tests = agg.mean_tests_used;
    row.total_cost = economic_cost(agg, model);
    row.per_user_value =
        n_app_users > 0 ? per_user_value(agg, baseline, n_app_users, model) : 0.0;
    return row;
}

void write_econ_csv(std::ostream& out, const std::vector<EconRow>& rows) {
    out << "scenario,app_proportion,asymptomatic_ratio,infected,q_false,q_true,q_tested,tests,"
           "total_cost,per_user_value\n";
    for (const auto& r : rows)
        out << r.scenario << ',' << r.app_proportion << ',' << r.asymptomatic_ratio << ','
            << r.infected << ',' << r.q_false << ',' << r.q_true << ',' << r.q_tested << ','
            << r.tests << ',' << r.total_cost << ',' << r.per_user_value << '\n';
}

void write_graph_csv(std::ostream& out, const TemporalContactGraph& graph) {
    out << "day,i,j,duration\n";
    for (std::size_t d = 0; d < graph.base_days.size(); ++d)
        for (const auto& c : graph.base_days[d].contacts())
            out << d << ',' << c.a << ',' << c.b << ',' << c.duration << '\n';
}

} // namespace ctsim
