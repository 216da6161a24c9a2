#include "zeno/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace zeno {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
constexpr double kMargin = 56.0;

bool usable(double v, bool log_axis) {
  return std::isfinite(v) && (!log_axis || v > 0.0);
}

double to_axis(double v, bool log_axis) {
  return log_axis ? std::log10(v) : v;
}

std::string num_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

void write_svg(std::ostream& out, std::span<const SvgSeries> series,
               const SvgOptions& opts) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const SvgSeries& s : series) {
    const std::size_t count = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < count; ++i) {
      if (!usable(s.x[i], opts.log_x) || !usable(s.y[i], opts.log_y))
        continue;
      const double ax = to_axis(s.x[i], opts.log_x);
      const double ay = to_axis(s.y[i], opts.log_y);
      x_lo = std::min(x_lo, ax);
      x_hi = std::max(x_hi, ax);
      y_lo = std::min(y_lo, ay);
      y_hi = std::max(y_hi, ay);
    }
  }
  if (!(x_lo <= x_hi)) {
    x_lo = 0.0;
    x_hi = 1.0;
  }
  if (!(y_lo <= y_hi)) {
    y_lo = 0.0;
    y_hi = 1.0;
  }
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;

  const double plot_w = opts.width - 2.0 * kMargin;
  const double plot_h = opts.height - 2.0 * kMargin;
  const auto px = [&](double ax) {
    return kMargin + (ax - x_lo) / (x_hi - x_lo) * plot_w;
  };
  const auto py = [&](double ay) {
    return opts.height - kMargin - (ay - y_lo) / (y_hi - y_lo) * plot_h;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width
      << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width
      << ' ' << opts.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
      << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"#888\"/>\n";
  if (!opts.title.empty())
    out << "<text x=\"" << opts.width / 2.0
        << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << opts.title << "</text>\n";
  if (!opts.x_label.empty())
    out << "<text x=\"" << opts.width / 2.0 << "\" y=\""
        << opts.height - 12.0 << "\" text-anchor=\"middle\" font-size=\"12\">"
        << opts.x_label << (opts.log_x ? " (log10)" : "") << "</text>\n";
  if (!opts.y_label.empty())
    out << "<text x=\"16\" y=\"" << opts.height / 2.0
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 "
           "16 "
        << opts.height / 2.0 << ")\">" << opts.y_label
        << (opts.log_y ? " (log10)" : "") << "</text>\n";

  out << "<text x=\"" << kMargin << "\" y=\"" << opts.height - kMargin + 16.0
      << "\" font-size=\"10\">" << num_label(x_lo) << "</text>\n";
  out << "<text x=\"" << opts.width - kMargin << "\" y=\""
      << opts.height - kMargin + 16.0
      << "\" text-anchor=\"end\" font-size=\"10\">" << num_label(x_hi)
      << "</text>\n";
  out << "<text x=\"" << kMargin - 4.0 << "\" y=\""
      << opts.height - kMargin << "\" text-anchor=\"end\" font-size=\"10\">"
      << num_label(y_lo) << "</text>\n";
  out << "<text x=\"" << kMargin - 4.0 << "\" y=\"" << kMargin + 4.0
      << "\" text-anchor=\"end\" font-size=\"10\">" << num_label(y_hi)
      << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const SvgSeries& s = series[si];
    const char* color = kPalette[si % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    const std::size_t count = std::min(s.x.size(), s.y.size());
    bool first = true;
    for (std::size_t i = 0; i < count; ++i) {
      if (!usable(s.x[i], opts.log_x) || !usable(s.y[i], opts.log_y))
        continue;
      if (!first) out << ' ';
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2f,%.2f",
                    px(to_axis(s.x[i], opts.log_x)),
                    py(to_axis(s.y[i], opts.log_y)));
      out << buf;
      first = false;
    }
    out << "\"/>\n";
    out << "<text x=\"" << opts.width - kMargin - 4.0 << "\" y=\""
        << kMargin + 16.0 + 14.0 * static_cast<double>(si)
        << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << color << "\">"
        << s.label << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace zeno
