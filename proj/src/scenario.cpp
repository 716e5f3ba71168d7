#include "ctsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ctsim/errors.hpp"

namespace ctsim {

ScenarioConfig build_scenario(int id, double app_proportion, double asymptomatic_ratio) {
    if (app_proportion < 0.0 || app_proportion > 1.0)
        throw config_error("app proportion must lie in [0,1]");
    if (asymptomatic_ratio < 0.0 || asymptomatic_ratio > 1.0)
        throw config_error("asymptomatic ratio must lie in [0,1]");

    ScenarioConfig cfg;
    cfg.scenario_id = id;
    cfg.app_proportion = app_proportion;
    cfg.asymptomatic_ratio = asymptomatic_ratio;
    switch (id) {
        case 1:
            break;
        case 2:
            cfg.followup_testing = true;
            break;
        case 3:
            cfg.followup_testing = true;
            cfg.pre_exposure = true;
            break;
        case 4:
            cfg.followup_testing = true;
            cfg.pre_exposure = true;
            cfg.periodic_test_interval = 14;
            break;
        case 5:
            cfg.followup_testing = true;
            cfg.pre_exposure = true;
            cfg.periodic_test_interval = 14;
            cfg.use_extended_graph = true;
            cfg.population = 5000;
            break;
        default:
            throw config_error("unknown scenario id " + std::to_string(id));
    }
    return cfg;
}

std::vector<std::uint8_t> assign_app_users(std::uint32_t population, double proportion,
                                           Rng& rng) {
    if (proportion < 0.0 || proportion > 1.0)
        throw config_error("app proportion must lie in [0,1]");
    const auto count = static_cast<std::uint32_t>(std::llround(proportion * population));
    std::vector<std::uint8_t> flags(population, 0);
    if (count == 0) return flags;

    // partial Fisher-Yates: the first `count` entries form a uniform subset
    std::vector<PersonId> ids(population);
    std::iota(ids.begin(), ids.end(), 0);
    for (std::uint32_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::uint32_t> pick(i, population - 1);
        std::swap(ids[i], ids[pick(rng)]);
        flags[ids[i]] = 1;
    }
    return flags;
}

bool is_periodic_test_day(int day, const std::optional<int>& interval) {
    if (!interval) return false;
    return day > 0 && day % *interval == 0;
}

} // namespace ctsim
