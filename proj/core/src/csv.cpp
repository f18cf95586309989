#include "dipolar/csv.hpp"

#include <cstdio>
#include <sstream>

#include "dipolar/errors.hpp"
#include "dipolar/experiment.hpp"

namespace dipolar {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string csv_header(const std::vector<WatchEntry>& watch) {
  std::string h = "t_ps,cos1,cos2,entropy,norm,energy_rot";
  for (const auto& w : watch) {
    h += ",pop_" + std::to_string(w.l) + "_" + std::to_string(w.m) + "_" + std::to_string(w.lp) + "_" +
         std::to_string(w.mp);
  }
  return h;
}

std::string csv_row(const TimeSeriesSample& s) {
  std::string row = format_double(s.t_ps);
  for (double v : {s.cos1, s.cos2, s.entropy, s.norm, s.energy_rot}) row += "," + format_double(v);
  for (double p : s.populations) row += "," + format_double(p);
  return row;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<WatchEntry>& watch)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw IoError("cannot open " + path.string() + " for writing");
  out_ << csv_header(watch) << '\n';
}

void CsvWriter::append(const TimeSeriesSample& sample) {
  out_ << csv_row(sample) << '\n';
  if (!out_) throw IoError("write to " + path_.string() + " failed");
}

void CsvWriter::mark_failure(const std::string& message) {
  std::string flat = message;
  for (char& ch : flat) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  out_ << kFailureMarker << flat << '\n';
  out_.flush();
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw QueryError("no column named " + name);
}

std::vector<double> CsvTable::values(const std::string& name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw QueryError(path.string() + " is empty");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  const std::string marker = kFailureMarker;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind(marker, 0) == 0) {
      table.failed = true;
      table.failure = line.substr(marker.size());
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw QueryError(path.string() + ": malformed value '" + cell + "'");
      }
    }
    if (row.size() != table.header.size()) throw QueryError(path.string() + ": ragged row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

RunOutcome run_to_directory(const RunConfig& config, const std::filesystem::path& out_dir, const std::string& name) {
  const Experiment experiment = plan_experiment(config);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  RunOutcome outcome;
  outcome.name = name;
  outcome.csv = out_dir / (name + ".csv");
  outcome.config = out_dir / (name + ".config.json");
  {
    std::ofstream cfg(outcome.config, std::ios::binary | std::ios::trunc);
    if (!cfg) throw IoError("cannot open " + outcome.config.string() + " for writing");
    cfg << config_to_json(config);
  }

  CsvWriter writer(outcome.csv, config.output.watch_populations);
  try {
    const Trajectory t = simulate(experiment, [&](const TimeSeriesSample& s) { writer.append(s); });
    outcome.rows = t.samples.size();
  } catch (const NumericalError& e) {
    writer.mark_failure(e.what());
    throw;
  }
  return outcome;
}

}  // namespace dipolar
