#include "lcjlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "lcjlab/errors.hpp"

namespace lcj::svg {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string line_plot(const std::vector<Series>& series, const PlotOptions& options) {
  if (series.empty()) throw ValidationError("line_plot: no series");
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  auto tx = [&](double v) { return options.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return options.log_y ? std::log10(v) : v; };
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw ValidationError("line_plot: series length mismatch");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (options.log_x && s.x[i] <= 0.0) throw ValidationError("line_plot: log axis needs positive x");
      if (options.log_y && s.y[i] <= 0.0) throw ValidationError("line_plot: log axis needs positive y");
      xmin = std::min(xmin, tx(s.x[i]));
      xmax = std::max(xmax, tx(s.x[i]));
      ymin = std::min(ymin, ty(s.y[i]));
      ymax = std::max(ymax, ty(s.y[i]));
    }
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  const int ml = 64, mr = 16, mt = 36, mb = 48;
  double pw = options.width - ml - mr, ph = options.height - mt - mb;
  auto px = [&](double v) { return ml + (tx(v) - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double v) { return mt + ph - (ty(v) - ymin) / (ymax - ymin) * ph; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << options.width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
      << options.title << "</text>\n";
  // axes
  out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
      << mt + ph << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
      << "\" stroke=\"black\"/>\n";
  const int ticks = 5;
  for (int t = 0; t <= ticks; ++t) {
    double fx = xmin + (xmax - xmin) * t / ticks;
    double fy = ymin + (ymax - ymin) * t / ticks;
    double sx = ml + pw * t / ticks;
    double sy = mt + ph - ph * t / ticks;
    double vx = options.log_x ? std::pow(10.0, fx) : fx;
    double vy = options.log_y ? std::pow(10.0, fy) : fy;
    out << "<line x1=\"" << sx << "\" y1=\"" << mt + ph << "\" x2=\"" << sx << "\" y2=\""
        << mt + ph + 4 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << sx << "\" y=\"" << mt + ph + 18
        << "\" text-anchor=\"middle\" font-size=\"10\">" << fmt(vx) << "</text>\n";
    out << "<line x1=\"" << ml - 4 << "\" y1=\"" << sy << "\" x2=\"" << ml << "\" y2=\"" << sy
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml - 8 << "\" y=\"" << sy + 3
        << "\" text-anchor=\"end\" font-size=\"10\">" << fmt(vy) << "</text>\n";
  }
  out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << options.height - 8
      << "\" text-anchor=\"middle\" font-size=\"12\">" << options.x_label << "</text>\n";
  out << "<text x=\"14\" y=\"" << mt + ph / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 14 " << mt + ph / 2
      << ")\">" << options.y_label << "</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % 6];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[s].x.size(); ++i)
      out << px(series[s].x[i]) << "," << py(series[s].y[i]) << " ";
    out << "\"/>\n";
    for (std::size_t i = 0; i < series[s].x.size(); ++i)
      out << "<circle cx=\"" << px(series[s].x[i]) << "\" cy=\"" << py(series[s].y[i])
          << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    out << "<text x=\"" << ml + pw - 4 << "\" y=\"" << mt + 14 + 14 * s
        << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << color << "\">" << series[s].name
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lcj::svg
