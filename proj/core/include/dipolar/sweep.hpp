#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dipolar/config.hpp"

namespace dipolar {

// A sweep value: a number, or a symbolic period name.
struct AxisValue {
  double number = 0.0;
  std::optional<std::string> symbol;
};

struct SweepAxis {
  std::string name;  // R_m, E0_Vpm, period or l_max
  std::vector<AxisValue> values;
};

struct SweepSpec {
  RunConfig base;
  std::vector<SweepAxis> axes;  // one or two
  int parallelism = 1;
  std::string out_dir = "sweep";

  void validate() const;
};

struct SweepPoint {
  std::size_t index = 0;
  std::vector<std::pair<std::string, AxisValue>> params;
  RunConfig config;
};

struct SweepPointResult {
  SweepPoint point;
  bool ok = false;
  int exit_code = 0;
  std::string error;
  std::filesystem::path csv;
};

SweepSpec parse_sweep_spec(std::string_view json_text);

// Cartesian product of the axes, first axis outermost.
std::vector<SweepPoint> expand_sweep(const SweepSpec& spec);

// Worker count: SIM_THREADS if set and positive, otherwise spec.parallelism.
int sweep_workers(const SweepSpec& spec);

// Runs every point into <out_dir>/point_NNN/ and writes <out_dir>/manifest.json once all settle.
// A failing point is recorded and does not stop the others.
std::vector<SweepPointResult> run_sweep(const SweepSpec& spec);

}  // namespace dipolar
