#pragma once

#include <span>
#include <string>
#include <vector>

#include "zeno/spectral.hpp"
#include "zeno/spin_dynamics.hpp"

namespace zeno {

enum class Method { free_evolution, modulation, measurement, mixed };

std::string_view method_name(Method m);

/// One controlled evolution: pulse delay tau and pulse count n, total time
/// t = n * tau. Free evolution is represented as tau = t, n = 1.
struct Protocol {
  Method kind = Method::free_evolution;
  double tau = 0.0;
  long n_pulses = 1;

  double total_time() const { return tau * static_cast<double>(n_pulses); }

  static Protocol free_evolution(double t) {
    return {Method::free_evolution, t, 1};
  }
};

enum class Route { quadrature, ensemble, both };

struct EvalOptions {
  double quad_rtol = 1e-8;
  long quad_budget = 1 << 20;
  long ensemble_k = 100000;
  /// Allowed relative disagreement between the two routes under Route::both.
  double route_tol = 1e-4;
};

struct TransitionResult {
  double p_prime = 0.0;
  double p_free = 0.0;
  double ratio = 0.0;  // p_prime / p_free; < 1 suppression, > 1 enhancement
  std::string route = "quadrature";
  bool converged = true;
  /// Largest relative gap between quadrature and ensemble values when both
  /// routes were evaluated; 0 otherwise.
  double route_rel_diff = 0.0;
};

/// Ensemble-averaged transition probability of one method at delay tau and
/// (possibly fractional) pulse count n, by quadrature over the density.
/// Modulation integrands get pre-split panels and resonance knots where
/// sin^2(lambda) dips toward zero.
QuadResult method_expectation(const SpectralDensity& d, double g, Method m,
                              double tau, double n,
                              const EvalOptions& opts = {});

/// Same quantity from an explicit detuning list (closed form per spin,
/// compensated fixed-order mean).
double method_ensemble_mean(const EnsembleSpec& ensemble, double g, Method m,
                            double tau, double n);

/// Full result for one protocol: p_prime, the free-evolution reference at
/// the same total time, and their ratio, all computed on the same route.
/// Quadrature non-convergence falls back to the K-point quantile ensemble
/// and tags the route field.
TransitionResult transition_probability(const SpectralDensity& d, double g,
                                        const Protocol& protocol,
                                        Route route = Route::quadrature,
                                        const EvalOptions& opts = {});

/// Two-pulse closed-form integrands of the transition probability.
double two_pulse_mod(const SpectralDensity& d, double g, double tau,
                     const EvalOptions& opts = {});
double two_pulse_meas(const SpectralDensity& d, double g, double tau,
                      const EvalOptions& opts = {});

/// Short-delay limits and critical quantities.
struct AsymptoticRates {
  double gamma0 = 0.0;        // 2 pi g^2 rho(0)
  double gamma_meas = 0.0;    // g^2 tau
  double gamma_mix = 0.0;     // (1/2) b^2 g^2 tau^3
  double p_mod_frozen = 0.0;  // (1/2) g^2 tau^2
  double t_c = 0.0;           // (b^2 tau)^-1
  double tau_c = 0.0;         // (b^2 t)^-1
  double n_c = 0.0;           // b^2 t^2
};

AsymptoticRates asymptotics(double g, double tau, double t,
                            const SpectralMoments& m);

/// Small-tau predictions for the controlled-to-free ratios.
struct SmallTauRatios {
  double meas_ratio = 0.0;  // tau / (2 pi rho(0))
  double mix_ratio = 0.0;   // b^2 tau^3 / (2 pi rho(0))
};

SmallTauRatios small_tau_ratios(double tau, const SpectralMoments& m);

struct Crossing {
  double location = 0.0;     // refined scan-variable value
  long nearest_even_n = 0;   // nearest even pulse count at the crossing
};

/// Two-pulse scan: sign changes of p'_a(tau) - p'_b(tau) over the tau grid,
/// refined by bisection to 1e-6. Empty result means no crossing.
std::vector<Crossing> crossing_scan(const SpectralDensity& d, double g,
                                    Method a, Method b,
                                    std::span<const double> tau_grid,
                                    const EvalOptions& opts = {});

/// Fixed-total-time scan over a continuous pulse count n (tau = t/n).
std::vector<Crossing> crossing_scan(const SpectralDensity& d, double g,
                                    Method a, Method b, double fixed_t,
                                    std::span<const double> n_grid,
                                    const EvalOptions& opts = {});

/// Fixed-delay scan over a continuous pulse count n (total time grows as
/// n * tau); locates e.g. the mixed-vs-modulation crossover time.
std::vector<Crossing> crossing_scan_fixed_delay(const SpectralDensity& d,
                                                double g, Method a, Method b,
                                                double tau,
                                                std::span<const double> n_grid,
                                                const EvalOptions& opts = {});

}  // namespace zeno
