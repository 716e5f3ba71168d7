#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ctsim/econ.hpp"
#include "ctsim/ensemble.hpp"

namespace ctsim {

/// Per-ensemble metrics CSV: one `metric,value` row per aggregate metric.
void write_metrics_csv(std::ostream& out, const AggregateResult& agg);

/// Mean time-series CSV: day,S,E,I,R,Q,T.
void write_series_csv(std::ostream& out, const AggregateResult& agg);

/// R0 calibration curve CSV: p,r0.
void write_r0_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve);

/// App-usage sweep CSV: app_proportion,infected.
void write_sweep_csv(std::ostream& out, const std::vector<std::pair<double, double>>& curve);

struct EconRow {
    int scenario = 0;
    double app_proportion = 0.0;
    double asymptomatic_ratio = 0.0;
    double infected = 0.0;
    double q_false = 0.0;
    double q_true = 0.0;
    double q_tested = 0.0;
    double tests = 0.0;
    double total_cost = 0.0;
    double per_user_value = 0.0;
};

EconRow make_econ_row(int scenario, double app_proportion, double asymptomatic_ratio,
                      const AggregateResult& agg, const AggregateResult& baseline,
                      int n_app_users, const CostModel& model);

/// Economics report CSV mirroring the metric tables: scenario,
/// app_proportion, asymptomatic_ratio, infected, q_false, q_true,
/// q_tested, tests, total_cost, per_user_value.
void write_econ_csv(std::ostream& out, const std::vector<EconRow>& rows);

/// Extended-graph dump: day,i,j,duration rows per base day.
void write_graph_csv(std::ostream& out, const TemporalContactGraph& graph);

} // namespace ctsim
