#pragma once

#include <string>
#include <vector>

#include "ptband/config.hpp"

namespace ptband {

/// Bundled experiment presets, one per figure panel. Accepted ids: "2a",
/// "2b", "2c", "3", "3a".."3c", "4", "4a", "4b", "5", "5a", "5b", "6",
/// "6a".."6c"; a bare figure number expands to all its panels.
std::vector<ExperimentConfig> figure_configs(const std::string& id);

std::vector<std::string> figure_panel_ids();

} // namespace ptband
