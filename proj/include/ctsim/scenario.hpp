#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ctsim/rng.hpp"
#include "ctsim/temporal_net.hpp"

namespace ctsim {

/// Intervention switches for one simulated policy.
///   1: quarantine of first-degree contacts only
///   2: + follow-up testing of degree 1-3 contacts every 3 days
///   3: + pre-exposure notification (contact reduction for degree 2/3)
///   4: + whole-population periodic testing every 14 days
///   5: scenario 4 on the graph extended to 5000 people
struct ScenarioConfig {
    int scenario_id = 1;
    double app_proportion = 0.0;
    double asymptomatic_ratio = 0.40;
    bool followup_testing = false;
    bool pre_exposure = false;
    std::optional<int> periodic_test_interval;
    bool use_extended_graph = false;
    int horizon_days = 120;
    std::uint32_t population = 180;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Builds the flag combination for scenario `id` (1..5). Throws
/// config_error for unknown ids.
ScenarioConfig build_scenario(int id, double app_proportion, double asymptomatic_ratio);

/// Uniformly random app-user subset of size round(proportion * population),
/// returned as per-person flags.
std::vector<std::uint8_t> assign_app_users(std::uint32_t population, double proportion, Rng& rng);

/// True when `day` is a synchronized periodic testing round: day > 0 and
/// day % interval == 0. Always false when the interval is unset.
bool is_periodic_test_day(int day, const std::optional<int>& interval);

} // namespace ctsim
