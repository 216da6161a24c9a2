#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace zeno {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct SvgOptions {
  int width = 720;
  int height = 480;
  bool log_x = false;
  bool log_y = false;
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Quick-look polyline chart. Non-finite points (and non-positive ones on a
/// log axis) are dropped from range fitting and drawing.
void write_svg(std::ostream& out, std::span<const SvgSeries> series,
               const SvgOptions& opts);

}  // namespace zeno
