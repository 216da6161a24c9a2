#include "zeno/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zeno/kahan.hpp"

namespace zeno {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

/// Integral of the unnormalized kernel from -omega_c to w (w inside the
/// support), in closed form per kind.
double kernel_integral(const SpectralDensity& d, double w) {
  double lo = -d.omega_c;
  switch (d.kind) {
    case DistKind::gaussian: {
      // kernel exp(-(x - omega_m)^2 / (2 gamma^2))
      double scale = d.gamma * std::sqrt(std::numbers::pi / 2.0);
      double hi_arg = (w - d.omega_m) / (d.gamma * kSqrt2);
      double lo_arg = (lo - d.omega_m) / (d.gamma * kSqrt2);
      return scale * (std::erf(hi_arg) - std::erf(lo_arg));
    }
    case DistKind::lorentzian: {
      // kernel 1 / ((x - omega_m)^2 + gamma^2)
      return (std::atan((w - d.omega_m) / d.gamma) -
              std::atan((lo - d.omega_m) / d.gamma)) /
             d.gamma;
    }
    case DistKind::exponential: {
      // kernel exp(-|x - omega_m| / gamma)
      auto left_part = [&](double x) {
        // integral from -omega_c to x for x <= omega_m
        return d.gamma * (std::exp(-(d.omega_m - x) / d.gamma) -
                          std::exp(-(d.omega_m - lo) / d.gamma));
      };
      if (w <= d.omega_m) return left_part(w);
      return left_part(d.omega_m) +
             d.gamma * (1.0 - std::exp(-(w - d.omega_m) / d.gamma));
    }
  }
  return 0.0;
}

double kernel_at(const SpectralDensity& d, double omega) {
  double x = omega - d.omega_m;
  switch (d.kind) {
    case DistKind::gaussian:
      return std::exp(-x * x / (2.0 * d.gamma * d.gamma));
    case DistKind::lorentzian:
      return 1.0 / (x * x + d.gamma * d.gamma);
    case DistKind::exponential:
      return std::exp(-std::abs(x) / d.gamma);
  }
  return 0.0;
}

}  // namespace

std::string_view dist_name(DistKind kind) {
  switch (kind) {
    case DistKind::gaussian: return "gaussian";
    case DistKind::lorentzian: return "lorentzian";
    case DistKind::exponential: return "exponential";
  }
  return "unknown";
}

SpectralDensity normalize(DistKind kind, double omega_m, double gamma,
                          double omega_c) {
  if (!(gamma > 0.0)) throw std::invalid_argument("normalize: gamma must be > 0");
  if (!(omega_c > 0.0))
    throw std::invalid_argument("normalize: omega_c must be > 0");
  SpectralDensity d{kind, omega_m, gamma, omega_c, 1.0};
  double total = kernel_integral(d, omega_c);
  if (!(total > 0.0))
    throw std::invalid_argument("normalize: kernel mass vanishes on support");
  d.c_norm = 1.0 / total;
  return d;
}

double density_at(const SpectralDensity& d, double omega) {
  if (omega < -d.omega_c || omega > d.omega_c) return 0.0;
  return d.c_norm * kernel_at(d, omega);
}

double cdf(const SpectralDensity& d, double omega) {
  if (omega <= -d.omega_c) return 0.0;
  if (omega >= d.omega_c) return 1.0;
  return std::clamp(d.c_norm * kernel_integral(d, omega), 0.0, 1.0);
}

double quantile(const SpectralDensity& d, double u) {
  u = std::clamp(u, 0.0, 1.0);
  double lo = -d.omega_c;
  double hi = d.omega_c;
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    if (cdf(d, mid) < u)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

SpectralMoments moments(const SpectralDensity& d) {
  SpectralMoments m;
  m.rho0 = density_at(d, 0.0);
  ExpectationOptions opts;
  opts.rel_tol = 1e-12;
  QuadResult second = integrate_expectation(
      d, [](double w) { return w * w; }, opts);
  m.b_sq = second.value;
  return m;
}

EnsembleSpec EnsembleSpec::from_list(std::vector<double> omegas) {
  EnsembleSpec e;
  e.omegas = std::move(omegas);
  return e;
}

double EnsembleSpec::b_sq_discrete() const {
  std::vector<double> sq(omegas.size());
  for (std::size_t i = 0; i < omegas.size(); ++i) sq[i] = omegas[i] * omegas[i];
  return compensated_mean(sq);
}

EnsembleSpec quantile_sample(const SpectralDensity& d, long k_count) {
  if (k_count < 1)
    throw std::invalid_argument("quantile_sample: k_count must be >= 1");
  EnsembleSpec e;
  e.omegas.resize(static_cast<std::size_t>(k_count));
  for (long k = 1; k <= k_count; ++k) {
    double u = (static_cast<double>(k) - 0.5) / static_cast<double>(k_count);
    e.omegas[static_cast<std::size_t>(k - 1)] = quantile(d, u);
  }
  return e;
}

QuadResult integrate_expectation(const SpectralDensity& d,
                                 const std::function<double(double)>& f,
                                 const ExpectationOptions& opts) {
  std::vector<double> knots = opts.extra_knots;
  knots.push_back(0.0);
  knots.push_back(d.omega_m);
  double width = 0.0;
  if (opts.oscillation_rate > 0.0)
    width = std::numbers::pi / (2.0 * opts.oscillation_rate);
  std::size_t panel_cap = static_cast<std::size_t>(
      std::max<long>(64, opts.max_evaluations / 30));
  panel_cap = std::min<std::size_t>(panel_cap, 65536);
  std::vector<double> edges =
      make_edges(-d.omega_c, d.omega_c, std::move(knots), width, panel_cap);
  auto integrand = [&](double w) { return density_at(d, w) * f(w); };
  return integrate_adaptive(integrand, edges, opts.rel_tol,
                            opts.max_evaluations);
}

}  // namespace zeno
