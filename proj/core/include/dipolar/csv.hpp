#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "dipolar/config.hpp"
#include "dipolar/observables.hpp"

namespace dipolar {

// 17 significant digits, shortest form that round-trips.
std::string format_double(double value);

// t_ps,cos1,cos2,entropy,norm,energy_rot,pop_l_m_lp_mp...
std::string csv_header(const std::vector<WatchEntry>& watch);
std::string csv_row(const TimeSeriesSample& sample);

inline constexpr const char* kFailureMarker = "# FAILED: ";

// Streams rows to disk as they are produced so partial output survives a failure.
class CsvWriter {
 public:
  // Throws IoError if the file cannot be opened.
  CsvWriter(const std::filesystem::path& path, const std::vector<WatchEntry>& watch);

  void append(const TimeSeriesSample& sample);
  void mark_failure(const std::string& message);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  bool failed = false;
  std::string failure;

  // Index of a named column; throws QueryError if absent.
  std::size_t column(const std::string& name) const;
  std::vector<double> values(const std::string& name) const;
};

// Throws IoError if unreadable, QueryError if malformed.
CsvTable read_csv(const std::filesystem::path& path);

struct RunOutcome {
  std::string name;
  std::filesystem::path csv;
  std::filesystem::path config;
  std::size_t rows = 0;
};

// Writes <out_dir>/<name>.csv and <out_dir>/<name>.config.json. On NumericalError the CSV keeps the rows
// written so far plus a failure marker, and the error is rethrown.
RunOutcome run_to_directory(const RunConfig& config, const std::filesystem::path& out_dir, const std::string& name);

}  // namespace dipolar
