#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "statgeo/config.hpp"

namespace statgeo::scenario {

struct RunReport {
    std::vector<std::string> files;  // paths written, in output order
    double seconds = 0.0;
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<std::pair<std::string, std::string>> notes;
    std::vector<std::pair<std::string, bool>> checks;
};

// Executes the scenario, writing CSVs (and SVGs when plots are on) into
// cfg.output_dir. Output content depends only on the config, so a fixed
// seed reproduces files byte for byte.
RunReport run_scenario(const ScenarioConfig& cfg);

void print_report(std::ostream& out, const ScenarioConfig& cfg,
                  const RunReport& report);

}  // namespace statgeo::scenario
