#pragma once

#include "ctsim/ensemble.hpp"

namespace ctsim {

/// Social cost constants (USD).
struct CostModel {
    double cost_per_quarantine_day = 358.0;
    double cost_per_test = 127.0;
    double cost_per_infection = 8500.0;
};

/// Total economic cost of an ensemble: infections * infection cost +
/// all quarantine days (false, true and tested alike) * per-day cost +
/// tests * per-test cost.
double economic_cost(const AggregateResult& aggregate, const CostModel& model);

/// Average economic value per app user: the decrease in total cost versus
/// the baseline (scenario 1 at 0% usage, same asymptomatic ratio) divided
/// by the number of app users. May be negative. Throws config_error when
/// n_app_users is zero.
double per_user_value(const AggregateResult& scenario_agg, const AggregateResult& baseline_agg,
                      int n_app_users, const CostModel& model);

} // namespace ctsim
