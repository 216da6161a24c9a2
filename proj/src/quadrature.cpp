#include "zeno/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "zeno/kahan.hpp"

namespace zeno {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
// (Piessens et al., QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool refinable = true;
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  double center = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double offset = half * kXgk[j];
    double fsum = f(center - offset) + f(center + offset);
    result_kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = result_kronrod * half;
  p.error = std::abs((result_kronrod - result_gauss) * half);
  p.refinable = (b - a) > 1e-14 * (1.0 + std::abs(a) + std::abs(b));
  return p;
}

struct WorstFirst {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // deterministic tie-break
  }
};

}  // namespace

std::vector<double> make_edges(double a, double b,
                               std::vector<double> interior_knots,
                               double max_panel_width,
                               std::size_t max_initial_panels) {
  std::vector<double> knots;
  knots.push_back(a);
  for (double k : interior_knots)
    if (k > a && k < b) knots.push_back(k);
  knots.push_back(b);
  std::sort(knots.begin(), knots.end());
  double merge_tol = 1e-12 * (1.0 + std::abs(a) + std::abs(b));
  knots.erase(std::unique(knots.begin(), knots.end(),
                          [merge_tol](double x, double y) {
                            return std::abs(x - y) <= merge_tol;
                          }),
              knots.end());
  if (knots.back() < b) knots.back() = b;

  if (max_panel_width <= 0.0) return knots;
  std::size_t needed = 0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    needed += static_cast<std::size_t>(
        std::ceil((knots[i + 1] - knots[i]) / max_panel_width));
  if (needed > max_initial_panels) {
    // Budget guard: widen panels uniformly instead of overshooting.
    max_panel_width *= static_cast<double>(needed) /
                       static_cast<double>(max_initial_panels);
  }
  std::vector<double> edges;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double lo = knots[i];
    double hi = knots[i + 1];
    auto pieces = static_cast<std::size_t>(
        std::max(1.0, std::ceil((hi - lo) / max_panel_width)));
    for (std::size_t p = 0; p < pieces; ++p)
      edges.push_back(lo + (hi - lo) * static_cast<double>(p) /
                               static_cast<double>(pieces));
  }
  edges.push_back(knots.back());
  return edges;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              const std::vector<double>& edges, double rel_tol,
                              long max_evaluations) {
  QuadResult out;
  if (edges.size() < 2) return out;

  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> active;
  std::vector<Panel> finished;
  double value_running = 0.0;
  double error_running = 0.0;

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = eval_panel(f, edges[i], edges[i + 1]);
    out.evaluations += 15;
    value_running += p.value;
    error_running += p.error;
    active.push(p);
  }

  auto good_enough = [&]() {
    return error_running <= rel_tol * std::abs(value_running) ||
           error_running < 1e-300;
  };

  while (!good_enough() && !active.empty() &&
         out.evaluations + 30 <= max_evaluations) {
    Panel worst = active.top();
    active.pop();
    if (!worst.refinable) {
      finished.push_back(worst);
      continue;
    }
    double mid = 0.5 * (worst.a + worst.b);
    Panel left = eval_panel(f, worst.a, mid);
    Panel right = eval_panel(f, mid, worst.b);
    out.evaluations += 30;
    value_running += left.value + right.value - worst.value;
    error_running += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
  }

  while (!active.empty()) {
    finished.push_back(active.top());
    active.pop();
  }
  // Re-sum in interval order so the result is independent of refinement
  // history round-off drift.
  std::sort(finished.begin(), finished.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  KahanSum value_sum;
  KahanSum error_sum;
  for (const Panel& p : finished) {
    value_sum.add(p.value);
    error_sum.add(p.error);
  }
  out.value = value_sum.value();
  out.error = error_sum.value();
  out.converged = out.error <= rel_tol * std::abs(out.value) ||
                  out.error < 1e-300;
  return out;
}

}  // namespace zeno
