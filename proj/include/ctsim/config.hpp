#pragma once

#include <optional>
#include <string>

#include "ctsim/ensemble.hpp"
#include "ctsim/trial.hpp"

namespace ctsim {

/// One fully specified run: simulation config, ensemble options and the
/// data source. Mirrors the JSON configuration file.
struct RunConfig {
    SimConfig sim;
    EnsembleOptions ensemble;
    std::optional<std::string> data_path; // proximity log; synthetic when absent

    /// Parses a JSON config. Unknown keys are rejected. All keys are
    /// optional; defaults match the embedded parameter set.
    static RunConfig from_json_file(const std::string& path);
    static RunConfig from_json_text(const std::string& text);
};

/// Loads the configured proximity data (file or bundled synthetic set).
TemporalContactGraph load_run_graph(const RunConfig& cfg);

} // namespace ctsim
