#pragma once

#include <string>
#include <vector>

#include "ermlab/decomposition.hpp"
#include "ermlab/json_io.hpp"

namespace ermlab::cli {

// A frozen tradeoff experiment: classes, distribution, sample size and seed
// are pinned so the run is reproducible bit for bit.
struct ScenarioResult {
    std::string name;
    TradeoffReport report;
    TradeoffCase classified = TradeoffCase::Inconclusive;
    Json report_json;
    std::string samples_csv;
};

std::vector<std::string> scenario_names();

// Throws ConfigError for an unknown name.
ScenarioResult run_scenario(const std::string& name);

} // namespace ermlab::cli
