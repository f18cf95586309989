#pragma once

#include <filesystem>
#include <string>

#include "dipolar/csv.hpp"

namespace dipolar {

// Three stacked panels against t_ps: orientations, entropy, watched populations.
std::string render_svg(const CsvTable& table, const std::string& title);

// Reads a CSV and writes <out_dir>/<stem>.svg, returning its path.
std::filesystem::path plot_csv(const std::filesystem::path& csv, const std::filesystem::path& out_dir);

}  // namespace dipolar
