#include "ctsim/econ.hpp"

#include "ctsim/errors.hpp"

namespace ctsim {

double economic_cost(const AggregateResult& aggregate, const CostModel& model) {
    return aggregate.mean_infected * model.cost_per_infection +
           aggregate.total_quarantine_days() * model.cost_per_quarantine_day +
           aggregate.mean_tests_used * model.cost_per_test;
}

double per_user_value(const AggregateResult& scenario_agg, const AggregateResult& baseline_agg,
                      int n_app_users, const CostModel& model) {
    if (n_app_users <= 0)
        throw config_error("per-user value undefined without app users");
    return (economic_cost(baseline_agg, model) - economic_cost(scenario_agg, model)) /
           static_cast<double>(n_app_users);
}

} // namespace ctsim
