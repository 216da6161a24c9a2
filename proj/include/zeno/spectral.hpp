#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "zeno/quadrature.hpp"

namespace zeno {

enum class DistKind { gaussian, lorentzian, exponential };

std::string_view dist_name(DistKind kind);

/// Truncated, normalized detuning distribution: kernel(omega) restricted to
/// [-omega_c, omega_c] and scaled by c_norm so it integrates to 1.
struct SpectralDensity {
  DistKind kind = DistKind::gaussian;
  double omega_m = 0.0;
  double gamma = 1.0;
  double omega_c = 100.0;
  double c_norm = 0.0;
};

/// Computes the normalization constant analytically and returns the ready
/// density. Throws std::invalid_argument for gamma <= 0 or omega_c <= 0.
SpectralDensity normalize(DistKind kind, double omega_m, double gamma,
                          double omega_c);

/// Normalized density value; exactly 0 outside [-omega_c, omega_c].
double density_at(const SpectralDensity& d, double omega);

/// Truncated cumulative distribution, 0 at -omega_c and 1 at +omega_c.
double cdf(const SpectralDensity& d, double omega);

/// Inverse CDF by bisection to 1e-13 absolute in omega.
double quantile(const SpectralDensity& d, double u);

struct SpectralMoments {
  double rho0 = 0.0;  // density at omega = 0
  double b_sq = 0.0;  // second moment over the truncated support
};

SpectralMoments moments(const SpectralDensity& d);

/// Deterministic ensemble of detunings: either an explicit list or the
/// K-point quantile sample omega_k = F^{-1}((k - 1/2)/K), sorted.
struct EnsembleSpec {
  std::vector<double> omegas;

  static EnsembleSpec from_list(std::vector<double> omegas);

  /// Mean of omega_k^2 (the discrete counterpart of b_sq).
  double b_sq_discrete() const;
};

EnsembleSpec quantile_sample(const SpectralDensity& d, long k_count);

struct ExpectationOptions {
  double rel_tol = 1e-8;
  long max_evaluations = 1 << 20;
  /// Largest |d(phase)/d(omega)| of an oscillatory integrand; panels are
  /// pre-split to at most a quarter oscillation so none is straddled.
  double oscillation_rate = 0.0;
  std::vector<double> extra_knots;
};

/// Adaptive quadrature of integral rho(omega) f(omega) d omega over the
/// truncated support. A non-converged result signals the caller to fall
/// back to a discrete ensemble sum.
QuadResult integrate_expectation(const SpectralDensity& d,
                                 const std::function<double(double)>& f,
                                 const ExpectationOptions& opts = {});

}  // namespace zeno
