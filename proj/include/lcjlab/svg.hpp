#pragma once

#include <string>
#include <vector>

namespace lcj::svg {

struct Series {
  std::string name;
  std::vector<double> x, y;
};

struct PlotOptions {
  std::string title;
  std::string x_label, y_label;
  bool log_x = false, log_y = false;
  int width = 640, height = 420;
};

// Presentation-only line plot: axes, ticks, legend, one polyline per series.
std::string line_plot(const std::vector<Series>& series, const PlotOptions& options);

}  // namespace lcj::svg
