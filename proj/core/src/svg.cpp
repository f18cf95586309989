#include "dipolar/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

constexpr double kWidth = 800.0;
constexpr double kPanelHeight = 220.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kGap = 40.0;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};

std::string num(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2f", v);
  return b;
}

std::string label(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", v);
  return b;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void panel(std::ostringstream& svg, const CsvTable& table, const std::vector<std::string>& columns,
           const std::string& ylabel, double top) {
  const auto t = table.values("t_ps");
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  double t_min = t.empty() ? 0.0 : t.front();
  double t_max = t.empty() ? 1.0 : t.back();
  if (t_max <= t_min) t_max = t_min + 1.0;

  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -y_min;
  for (const auto& c : columns) {
    for (double v : table.values(c)) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (!std::isfinite(y_min)) y_min = 0.0, y_max = 1.0;
  if (y_max - y_min < 1e-12) y_min -= 0.5, y_max += 0.5;

  auto x_of = [&](double v) { return kMarginLeft + (v - t_min) / (t_max - t_min) * plot_w; };
  auto y_of = [&](double v) { return top + kPanelHeight - (v - y_min) / (y_max - y_min) * kPanelHeight; };

  svg << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(top) << "\" width=\"" << num(plot_w)
      << "\" height=\"" << num(kPanelHeight) << "\" fill=\"none\" stroke=\"#000\"/>\n";
  svg << "<text x=\"" << num(kMarginLeft - 8) << "\" y=\"" << num(top + 10)
      << "\" text-anchor=\"end\" font-size=\"11\">" << label(y_max) << "</text>\n";
  svg << "<text x=\"" << num(kMarginLeft - 8) << "\" y=\"" << num(top + kPanelHeight)
      << "\" text-anchor=\"end\" font-size=\"11\">" << label(y_min) << "</text>\n";
  svg << "<text x=\"" << num(kMarginLeft) << "\" y=\"" << num(top + kPanelHeight + 14)
      << "\" font-size=\"11\">" << label(t_min) << "</text>\n";
  svg << "<text x=\"" << num(kMarginLeft + plot_w) << "\" y=\"" << num(top + kPanelHeight + 14)
      << "\" text-anchor=\"end\" font-size=\"11\">" << label(t_max) << " ps</text>\n";
  svg << "<text x=\"14\" y=\"" << num(top + kPanelHeight / 2) << "\" font-size=\"12\" transform=\"rotate(-90 14 "
      << num(top + kPanelHeight / 2) << ")\" text-anchor=\"middle\">" << escape(ylabel) << "</text>\n";

  for (std::size_t k = 0; k < columns.size(); ++k) {
    const auto y = table.values(columns[k]);
    const char* color = kColors[k % (sizeof kColors / sizeof kColors[0])];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < y.size(); ++i) svg << num(x_of(t[i])) << "," << num(y_of(y[i])) << " ";
    svg << "\"/>\n";
    svg << "<text x=\"" << num(kMarginLeft + plot_w - 4) << "\" y=\"" << num(top + 14 + 13.0 * k)
        << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << color << "\">" << escape(columns[k]) << "</text>\n";
  }
}

}  // namespace

std::string render_svg(const CsvTable& table, const std::string& title) {
  std::vector<std::string> pops;
  for (const auto& h : table.header) {
    if (h.rfind("pop_", 0) == 0) pops.push_back(h);
  }
  std::vector<std::vector<std::string>> panels{{"cos1", "cos2"}, {"entropy"}};
  std::vector<std::string> labels{"orientation", "entropy"};
  if (!pops.empty()) {
    panels.push_back(pops);
    labels.push_back("population");
  }

  const double height = kMarginTop + panels.size() * (kPanelHeight + kGap);
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidth) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
      << (table.failed ? " (run failed)" : "") << "</text>\n";
  for (std::size_t p = 0; p < panels.size(); ++p) {
    panel(svg, table, panels[p], labels[p], kMarginTop + p * (kPanelHeight + kGap));
  }
  svg << "</svg>\n";
  return svg.str();
}

std::filesystem::path plot_csv(const std::filesystem::path& csv, const std::filesystem::path& out_dir) {
  const CsvTable table = read_csv(csv);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  const auto path = out_dir / (csv.stem().string() + ".svg");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << render_svg(table, csv.stem().string());
  if (!out) throw IoError("write to " + path.string() + " failed");
  return path;
}

}  // namespace dipolar
