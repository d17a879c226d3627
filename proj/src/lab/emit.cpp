#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qdist/lab.hpp"

namespace qdist::lab {
namespace {

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string g4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void write_metadata(const ExperimentConfig& cfg, std::ostream& out) {
  std::istringstream lines(describe(cfg));
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
}

void check(std::ostream& out) {
  if (!out) throw std::runtime_error("emit: write to sink failed");
}

struct Series {
  std::string label;
  std::vector<double> y;
};

struct PlotData {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<Series> series;
};

constexpr const char* kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

void write_svg(const PlotData& d, std::ostream& out) {
  constexpr double W = 720, H = 440, left = 70, right = 150, top = 40, bottom = 60;
  const double pw = W - left - right;
  const double ph = H - top - bottom;

  double x0 = *std::min_element(d.x.begin(), d.x.end());
  double x1 = *std::max_element(d.x.begin(), d.x.end());
  double y0 = 0.0, y1 = 0.0;
  bool first = true;
  for (const auto& s : d.series)
    for (double v : s.y) {
      y0 = first ? v : std::min(y0, v);
      y1 = first ? v : std::max(y1, v);
      first = false;
    }
  if (x1 == x0) x1 = x0 + 1.0;
  if (y1 == y0) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + (1.0 - (y - y0) / (y1 - y0)) * ph; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << left + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << d.title << "</text>\n";

  // Axes box and ticks.
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x0 + (x1 - x0) * i / kTicks;
    const double yv = y0 + (y1 - y0) * i / kTicks;
    out << "<line x1=\"" << px(xv) << "\" y1=\"" << top + ph << "\" x2=\"" << px(xv) << "\" y2=\""
        << top + ph + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(xv) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
        << g4(xv) << "</text>\n";
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << left << "\" y2=\""
        << py(yv) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
        << g4(yv) << "</text>\n";
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">"
      << d.x_label << "</text>\n";
  out << "<text x=\"18\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << top + ph / 2 << ")\">" << d.y_label << "</text>\n";

  for (std::size_t k = 0; k < d.series.size(); ++k) {
    const auto& s = d.series[k];
    const char* colour = kColours[k % 5];
    out << "<polyline class=\"series\" data-label=\"" << s.label << "\" fill=\"none\" stroke=\""
        << colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.y.size(); ++i)
      out << (i ? " " : "") << g4(px(d.x[i])) << ',' << g4(py(s.y[i]));
    out << "\"/>\n";
    const double ly = top + 10 + 20.0 * static_cast<double>(k);
    out << "<line x1=\"" << left + pw + 15 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 40
        << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << left + pw + 46 << "\" y=\"" << ly + 4 << "\">" << s.label << "</text>\n";
  }
  out << "</svg>\n";
}

std::string title_for(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "model " << (c.model == ModelKind::A ? "A" : "B") << ", lam1=" << g4(c.states[0].lam)
     << ", lam2=" << g4(c.states[1].lam);
  if (c.model == ModelKind::B) {
    os << ", g=" << g4(c.g);
    if (c.prep == PrepKind::coherent)
      os << ", |z|=" << g4(c.z_abs) << ", phase=" << g4(c.phase);
    else
      os << ", N=" << c.n;
  }
  return os.str();
}

void check_measures(std::span<const Measure> measures) {
  if (measures.empty()) throw std::invalid_argument("emit_plot: no measures requested");
}

}  // namespace

void emit_csv(const TimeSeries& ts, std::ostream& out) {
  write_metadata(ts.config, out);
  out << "t,D_T,D_HS,D_B,D_H,D_JS\n";
  for (const auto& row : ts.rows) {
    out << g12(row.t);
    for (double v : row.rec.values()) out << ',' << g12(v);
    out << '\n';
  }
  check(out);
}

void emit_csv(const ScanResult& scan, std::ostream& out) {
  write_metadata(scan.config, out);
  out << axis_name(scan.axis) << ",D_T,D_HS,D_B,D_H,D_JS\n";
  for (const auto& row : scan.rows) {
    out << g12(row.value);
    for (double v : row.max_increase) out << ',' << g12(v);
    out << '\n';
  }
  check(out);
}

void emit_plot(const TimeSeries& ts, std::ostream& out, std::span<const Measure> measures) {
  if (ts.rows.empty()) throw std::invalid_argument("emit_plot: empty time series");
  check_measures(measures);
  PlotData d;
  d.title = title_for(ts.config);
  d.x_label = ts.config.model == ModelKind::A ? "t [1/omega_c]" : "t [1/omega]";
  d.y_label = "D(t)";
  for (const auto& row : ts.rows) d.x.push_back(row.t);
  for (Measure m : measures) {
    Series s{std::string(measure_label(m)), {}};
    for (const auto& row : ts.rows) s.y.push_back(row.rec.get(m));
    d.series.push_back(std::move(s));
  }
  write_svg(d, out);
  check(out);
}

void emit_plot(const ScanResult& scan, std::ostream& out, std::span<const Measure> measures) {
  if (scan.rows.empty()) throw std::invalid_argument("emit_plot: empty scan");
  check_measures(measures);
  PlotData d;
  d.title = title_for(scan.config);
  d.x_label = std::string(axis_name(scan.axis));
  d.y_label = "MAX[D(t) - D(0)]";
  for (const auto& row : scan.rows) d.x.push_back(row.value);
  for (Measure m : measures) {
    const auto k = static_cast<std::size_t>(m);
    Series s{std::string(measure_label(m)), {}};
    for (const auto& row : scan.rows) s.y.push_back(row.max_increase[k]);
    d.series.push_back(std::move(s));
  }
  write_svg(d, out);
  check(out);
}

std::string per_measure_path(const std::string& path, Measure m) {
  const std::string label(measure_label(m));
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + "_" + label;
  return path.substr(0, dot) + "_" + label + path.substr(dot);
}

}  // namespace qdist::lab
