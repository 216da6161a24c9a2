#include "zeno/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "zeno/kahan.hpp"
#include "zeno/quadrature.hpp"

namespace zeno {
namespace {

constexpr double kTiny = 1e-300;

double method_single(const SpinParams& spin, Method m, double tau, double n) {
  switch (m) {
    case Method::free_evolution:
      return p0_single(spin, tau * n);
    case Method::modulation:
      return pmod_single_closed(spin, tau, n);
    case Method::measurement:
      return pmeas_single_transition(spin, tau, n);
    case Method::mixed:
      return pmix_single_transition(spin, tau, n);
  }
  throw std::logic_error("unknown method");
}

/// Largest |d(phase)/d(omega)| of the per-spin integrand's fastest sin^2
/// factor; panels are pre-split to half that oscillation period.
double oscillation_rate(Method m, double tau, double n) {
  switch (m) {
    case Method::free_evolution:
      return tau * n / 2.0;
    case Method::modulation:
      return (n + 1.0) * tau / 2.0;
    case Method::measurement:
    case Method::mixed:
      return tau / 2.0;
  }
  throw std::logic_error("unknown method");
}

/// Detunings where Omega * tau hits an odd multiple of pi/2, i.e. where
/// sin^2(lambda) reaches its minimum and the modulation integrand spikes.
std::vector<double> modulation_resonance_knots(double g, double tau,
                                               double omega_c) {
  std::vector<double> knots;
  if (tau <= 0.0) return knots;
  for (long j = 0; knots.size() < 512; ++j) {
    const double q = (2.0 * j + 1.0) * std::numbers::pi / (2.0 * tau);
    if (q <= g) continue;
    const double omega = 2.0 * std::sqrt((q - g) * (q + g));
    if (omega > omega_c) break;
    knots.push_back(omega);
    knots.push_back(-omega);
  }
  return knots;
}

void validate_protocol(const Protocol& p) {
  if (!(p.tau > 0.0)) throw std::invalid_argument("pulse delay must be > 0");
  if (p.n_pulses < 1) throw std::invalid_argument("pulse count must be >= 1");
  if (p.kind == Method::mixed && p.n_pulses % 2 != 0)
    throw std::invalid_argument("mixed protocol needs an even pulse count");
}

const EnsembleSpec& cached_ensemble(const SpectralDensity& d, long k_count) {
  using Key = std::tuple<int, double, double, double, long>;
  static std::map<Key, std::unique_ptr<EnsembleSpec>> cache;
  static std::mutex mutex;
  const Key key{static_cast<int>(d.kind), d.omega_m, d.gamma, d.omega_c,
                k_count};
  std::scoped_lock lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache
             .emplace(key, std::make_unique<EnsembleSpec>(
                               quantile_sample(d, k_count)))
             .first;
  return *it->second;
}

double rel_gap(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), kTiny});
}

struct PairResult {
  double p_prime = 0.0;
  double p_free = 0.0;
  bool converged = true;
};

PairResult quadrature_pair(const SpectralDensity& d, double g,
                           const Protocol& p, const EvalOptions& opts) {
  PairResult r;
  const QuadResult qp = method_expectation(d, g, p.kind, p.tau,
                                           static_cast<double>(p.n_pulses),
                                           opts);
  r.p_prime = qp.value;
  r.converged = qp.converged;
  if (p.kind == Method::free_evolution) {
    r.p_free = qp.value;
  } else {
    const QuadResult qf = method_expectation(d, g, Method::free_evolution,
                                             p.total_time(), 1.0, opts);
    r.p_free = qf.value;
    r.converged = r.converged && qf.converged;
  }
  return r;
}

PairResult ensemble_pair(const SpectralDensity& d, double g, const Protocol& p,
                         const EvalOptions& opts) {
  const EnsembleSpec& ensemble = cached_ensemble(d, opts.ensemble_k);
  PairResult r;
  r.p_prime = method_ensemble_mean(ensemble, g, p.kind, p.tau,
                                   static_cast<double>(p.n_pulses));
  r.p_free = p.kind == Method::free_evolution
                 ? r.p_prime
                 : method_ensemble_mean(ensemble, g, Method::free_evolution,
                                        p.total_time(), 1.0);
  return r;
}

/// Sign-change bracketing plus bisection shared by both scan flavours.
std::vector<Crossing> scan_gaps(std::span<const double> grid,
                                const std::function<double(double)>& gap,
                                bool even_from_location) {
  std::vector<Crossing> crossings;
  if (grid.size() < 2) return crossings;
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = gap(grid[i]);
  const auto record = [&](double location) {
    Crossing c;
    c.location = location;
    c.nearest_even_n =
        even_from_location
            ? std::max(2l, 2 * std::lround(location / 2.0))
            : 2;
    crossings.push_back(c);
  };
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double fa = values[i];
    const double fb = values[i + 1];
    if (fa == 0.0) {
      record(grid[i]);
      continue;
    }
    if (i + 2 == grid.size() && fb == 0.0) record(grid[i + 1]);
    if (!(fa * fb < 0.0)) continue;
    double lo = grid[i];
    double hi = grid[i + 1];
    double flo = fa;
    while (hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      const double fm = gap(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    record(0.5 * (lo + hi));
  }
  return crossings;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::free_evolution:
      return "free";
    case Method::modulation:
      return "mod";
    case Method::measurement:
      return "meas";
    case Method::mixed:
      return "mix";
  }
  throw std::logic_error("unknown method");
}

QuadResult method_expectation(const SpectralDensity& d, double g, Method m,
                              double tau, double n, const EvalOptions& opts) {
  ExpectationOptions eopts;
  eopts.rel_tol = opts.quad_rtol;
  eopts.max_evaluations = opts.quad_budget;
  eopts.oscillation_rate = oscillation_rate(m, tau, n);
  if (m == Method::modulation)
    eopts.extra_knots = modulation_resonance_knots(g, tau, d.omega_c);
  return integrate_expectation(
      d,
      [&](double omega) {
        return method_single(SpinParams{omega, g}, m, tau, n);
      },
      eopts);
}

double method_ensemble_mean(const EnsembleSpec& ensemble, double g, Method m,
                            double tau, double n) {
  std::vector<double> values(ensemble.omegas.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    values[k] = method_single(SpinParams{ensemble.omegas[k], g}, m, tau, n);
  return compensated_mean(values);
}

TransitionResult transition_probability(const SpectralDensity& d, double g,
                                        const Protocol& protocol, Route route,
                                        const EvalOptions& opts) {
  validate_protocol(protocol);
  TransitionResult r;
  const auto fill = [&](const PairResult& pair) {
    r.p_prime = pair.p_prime;
    r.p_free = pair.p_free;
    r.ratio = pair.p_free > 0.0
                  ? pair.p_prime / pair.p_free
                  : std::numeric_limits<double>::quiet_NaN();
  };
  switch (route) {
    case Route::quadrature: {
      const PairResult quad = quadrature_pair(d, g, protocol, opts);
      if (quad.converged) {
        fill(quad);
        r.route = "quadrature";
      } else {
        fill(ensemble_pair(d, g, protocol, opts));
        r.route = "ensemble(" + std::to_string(opts.ensemble_k) +
                  ")+fallback";
      }
      break;
    }
    case Route::ensemble: {
      fill(ensemble_pair(d, g, protocol, opts));
      r.route = "ensemble(" + std::to_string(opts.ensemble_k) + ")";
      break;
    }
    case Route::both: {
      const PairResult quad = quadrature_pair(d, g, protocol, opts);
      const PairResult ens = ensemble_pair(d, g, protocol, opts);
      fill(quad.converged ? quad : ens);
      r.converged = quad.converged;
      r.route = "both";
      r.route_rel_diff = std::max(rel_gap(quad.p_prime, ens.p_prime),
                                  rel_gap(quad.p_free, ens.p_free));
      break;
    }
  }
  return r;
}

double two_pulse_mod(const SpectralDensity& d, double g, double tau,
                     const EvalOptions& opts) {
  return method_expectation(d, g, Method::modulation, tau, 2.0, opts).value;
}

double two_pulse_meas(const SpectralDensity& d, double g, double tau,
                      const EvalOptions& opts) {
  return method_expectation(d, g, Method::measurement, tau, 2.0, opts).value;
}

AsymptoticRates asymptotics(double g, double tau, double t,
                            const SpectralMoments& m) {
  AsymptoticRates a;
  a.gamma0 = 2.0 * std::numbers::pi * g * g * m.rho0;
  a.gamma_meas = g * g * tau;
  a.gamma_mix = 0.5 * m.b_sq * g * g * tau * tau * tau;
  a.p_mod_frozen = 0.5 * g * g * tau * tau;
  a.t_c = 1.0 / (m.b_sq * tau);
  a.tau_c = 1.0 / (m.b_sq * t);
  a.n_c = m.b_sq * t * t;
  return a;
}

SmallTauRatios small_tau_ratios(double tau, const SpectralMoments& m) {
  SmallTauRatios r;
  const double denom = 2.0 * std::numbers::pi * m.rho0;
  r.meas_ratio = tau / denom;
  r.mix_ratio = m.b_sq * tau * tau * tau / denom;
  return r;
}

std::vector<Crossing> crossing_scan(const SpectralDensity& d, double g,
                                    Method a, Method b,
                                    std::span<const double> tau_grid,
                                    const EvalOptions& opts) {
  const auto gap = [&](double tau) {
    return method_expectation(d, g, a, tau, 2.0, opts).value -
           method_expectation(d, g, b, tau, 2.0, opts).value;
  };
  return scan_gaps(tau_grid, gap, /*even_from_location=*/false);
}

std::vector<Crossing> crossing_scan(const SpectralDensity& d, double g,
                                    Method a, Method b, double fixed_t,
                                    std::span<const double> n_grid,
                                    const EvalOptions& opts) {
  const auto gap = [&](double n) {
    const double tau = fixed_t / n;
    return method_expectation(d, g, a, tau, n, opts).value -
           method_expectation(d, g, b, tau, n, opts).value;
  };
  return scan_gaps(n_grid, gap, /*even_from_location=*/true);
}

std::vector<Crossing> crossing_scan_fixed_delay(const SpectralDensity& d,
                                                double g, Method a, Method b,
                                                double tau,
                                                std::span<const double> n_grid,
                                                const EvalOptions& opts) {
  const auto gap = [&](double n) {
    return method_expectation(d, g, a, tau, n, opts).value -
           method_expectation(d, g, b, tau, n, opts).value;
  };
  return scan_gaps(n_grid, gap, /*even_from_location=*/true);
}

}  // namespace zeno
