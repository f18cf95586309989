#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dipolar/config.hpp"

namespace dipolar {

struct NamedRun {
  std::string name;  // used as the output file stem
  RunConfig config;
};

// fig1a fig1b fig2a fig2b fig3a fig3b fig4
const std::vector<std::string>& preset_names();

// The runs that make up one preset. Throws ConfigError for an unknown name.
std::vector<NamedRun> preset(std::string_view name);

}  // namespace dipolar
