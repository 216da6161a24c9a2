#pragma once

#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace zeno {

/// One CSV output record. `extra` feeds the optional trailing column some
/// figures append (e.g. a critical time or a predicted ratio).
struct SweepRow {
  std::string method;
  std::string dist;
  double omega_m = 0.0;
  double gamma = 1.0;
  double g = 0.0;
  double tau = 0.0;
  long n_pulses = 1;
  double t = 0.0;
  double p_prime = 0.0;
  double p_free = 0.0;
  double ratio = 0.0;
  std::string route = "quadrature";
  double extra = std::numeric_limits<double>::quiet_NaN();
};

/// Shortest round-trip-exact decimal form of a double ("%.17g").
std::string format_double(double value);

/// Writes '#'-prefixed comment lines, the fixed header (plus the optional
/// extra column), then one line per row. Byte-identical output for
/// identical inputs.
void write_csv(std::ostream& out, std::span<const SweepRow> rows,
               std::span<const std::string> comment_lines,
               const std::string& extra_column = "");

}  // namespace zeno
