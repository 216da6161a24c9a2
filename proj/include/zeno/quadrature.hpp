#pragma once

#include <functional>
#include <vector>

namespace zeno {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Builds sorted panel edges for [a, b]: interior knots are clipped into the
/// interval and every gap is pre-split so no panel is wider than
/// max_panel_width (0 disables pre-splitting). The panel count is capped so
/// the initial pass cannot exhaust an evaluation budget by itself.
std::vector<double> make_edges(double a, double b,
                               std::vector<double> interior_knots,
                               double max_panel_width,
                               std::size_t max_initial_panels = 65536);

/// Globally adaptive Gauss-Kronrod (G7, K15) quadrature over the given
/// panel edges. The panel with the largest error estimate is bisected until
/// the total estimated error drops below rel_tol * |value| or the budget is
/// spent. Single-threaded and deterministic.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              const std::vector<double>& edges, double rel_tol,
                              long max_evaluations);

}  // namespace zeno
