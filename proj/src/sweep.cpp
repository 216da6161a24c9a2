#include "zeno/sweep.hpp"

#include <cstdio>

namespace zeno {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows,
               std::span<const std::string> comment_lines,
               const std::string& extra_column) {
  for (const std::string& line : comment_lines) out << "# " << line << '\n';
  out << "method,dist,omega_m,gamma,g,tau,n_pulses,t,p_prime,p_free,ratio,"
         "route";
  if (!extra_column.empty()) out << ',' << extra_column;
  out << '\n';
  for (const SweepRow& r : rows) {
    out << r.method << ',' << r.dist << ',' << format_double(r.omega_m) << ','
        << format_double(r.gamma) << ',' << format_double(r.g) << ','
        << format_double(r.tau) << ',' << r.n_pulses << ','
        << format_double(r.t) << ',' << format_double(r.p_prime) << ','
        << format_double(r.p_free) << ',' << format_double(r.ratio) << ','
        << r.route;
    if (!extra_column.empty()) out << ',' << format_double(r.extra);
    out << '\n';
  }
}

}  // namespace zeno
