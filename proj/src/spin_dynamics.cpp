#include "zeno/spin_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zeno {

namespace {

constexpr double kSin2LambdaFloor = 1e-14;

struct PeriodTrig {
  double cos_ot;   // cos(Omega tau)
  double sin_ot;   // sin(Omega tau)
  double w_ratio;  // omega / (2 Omega)
  double g_ratio;  // g / Omega
};

PeriodTrig period_trig(const SpinParams& spin, double tau) {
  double omega_r = rabi_frequency(spin);
  PeriodTrig t;
  t.cos_ot = std::cos(omega_r * tau);
  t.sin_ot = std::sin(omega_r * tau);
  t.w_ratio = omega_r > 0.0 ? 0.5 * spin.omega / omega_r : 0.0;
  t.g_ratio = omega_r > 0.0 ? spin.g / omega_r : 0.0;
  return t;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

/// [1 - x]^n without precision loss for n up to 10^6.
double survival_power(double x, double n) {
  x = clamp01(x);
  if (n <= 0.0) return 1.0;
  if (x < 0.5) return std::exp(n * std::log1p(-x));
  return std::pow(1.0 - x, n);
}

/// 1 - [1 - x]^n, exact in a relative sense when the result is tiny.
double transition_power(double x, double n) {
  x = clamp01(x);
  if (n <= 0.0) return 0.0;
  if (x < 0.5) return -std::expm1(n * std::log1p(-x));
  return 1.0 - std::pow(1.0 - x, n);
}

/// Per-spin amplitude (g^2/Omega^2) sin^2(Omega tau).
double meas_arg(const PeriodTrig& t) {
  double a = t.g_ratio * t.sin_ot;
  return a * a;
}

/// Per-spin amplitude (omega^2 g^2/Omega^4) sin^4(Omega tau) = (2 w g sin^2)^2
/// with w = omega/(2 Omega), g = g/Omega.
double mix_arg(const PeriodTrig& t) {
  double a = 2.0 * t.w_ratio * t.g_ratio * t.sin_ot * t.sin_ot;
  return a * a;
}

}  // namespace

double rabi_frequency(const SpinParams& spin) {
  return std::hypot(0.5 * spin.omega, spin.g);
}

Propagator2 operator*(const Propagator2& a, const Propagator2& b) {
  return {a.u11 * b.u11 + a.u12 * b.u21, a.u11 * b.u12 + a.u12 * b.u22,
          a.u21 * b.u11 + a.u22 * b.u21, a.u21 * b.u12 + a.u22 * b.u22};
}

Propagator2 z_pulse_matrix() {
  return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}};
}

Propagator2 projector_matrix() {
  return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
}

Propagator2 one_period_propagator(const SpinParams& spin, double tau) {
  PeriodTrig t = period_trig(spin, tau);
  cplx diag{t.cos_ot, -t.w_ratio * t.sin_ot};
  cplx off{0.0, t.g_ratio * t.sin_ot};
  return {diag, off, off, std::conj(diag)};
}

LambdaAngle lambda_angle(const SpinParams& spin, double tau) {
  PeriodTrig t = period_trig(spin, tau);
  // 1 - (w sin)^2 rewritten as cos^2 + (g/Omega)^2 sin^2: exact in [0,1]
  // and free of cancellation when (w sin)^2 is close to 1.
  double gs = t.g_ratio * t.sin_ot;
  return {clamp01(t.cos_ot * t.cos_ot + gs * gs)};
}

double p0_single(const SpinParams& spin, double t) {
  PeriodTrig trig = period_trig(spin, t);
  return clamp01(meas_arg(trig));
}

double pmod_single_closed(const SpinParams& spin, double tau, double n) {
  PeriodTrig t = period_trig(spin, tau);
  double amp = meas_arg(t);
  double gs = t.g_ratio * t.sin_ot;
  double sin2_lambda = clamp01(t.cos_ot * t.cos_ot + gs * gs);
  double factor;
  if (sin2_lambda < kSin2LambdaFloor) {
    // Removable singularity sin(lambda) -> 0: sin^2(n lambda)/sin^2(lambda)
    // tends to its supremum n^2.
    factor = n * n;
  } else {
    // lambda in [0, pi] with cos(lambda) = (omega/2 Omega) sin(Omega tau);
    // sin^2(n lambda) does not depend on the branch for integer n.
    double lambda = std::atan2(std::sqrt(sin2_lambda), t.w_ratio * t.sin_ot);
    double s = std::sin(n * lambda);
    factor = s * s / sin2_lambda;
  }
  return clamp01(amp * factor);
}

double pmod_single(const SpinParams& spin, double tau, long n) {
  if (n < 1) throw std::invalid_argument("pmod_single: n must be >= 1");
  if (n == 1 || n % 2 == 0)
    return pmod_single_closed(spin, tau, static_cast<double>(n));
  // Odd n >= 3: power of the period matrix Z U0 applied to spin-up.
  Propagator2 m = z_pulse_matrix() * one_period_propagator(spin, tau);
  cplx up{1.0, 0.0};
  cplx down{0.0, 0.0};
  for (long k = 0; k < n; ++k) {
    cplx nu = m.u11 * up + m.u12 * down;
    cplx nd = m.u21 * up + m.u22 * down;
    up = nu;
    down = nd;
  }
  return clamp01(std::norm(down));
}

double pmeas_single_survival(const SpinParams& spin, double tau, long n) {
  if (n < 0) throw std::invalid_argument("pmeas_single_survival: n must be >= 0");
  PeriodTrig t = period_trig(spin, tau);
  return survival_power(meas_arg(t), static_cast<double>(n));
}

double pmeas_single_transition(const SpinParams& spin, double tau, double n) {
  PeriodTrig t = period_trig(spin, tau);
  return transition_power(meas_arg(t), n);
}

double pmix_single_survival(const SpinParams& spin, double tau, long n) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument(
        "pmix_single_survival: closed form requires even n >= 0");
  PeriodTrig t = period_trig(spin, tau);
  return survival_power(mix_arg(t), 0.5 * static_cast<double>(n));
}

double pmix_single_transition(const SpinParams& spin, double tau, double n) {
  PeriodTrig t = period_trig(spin, tau);
  return transition_power(mix_arg(t), 0.5 * n);
}

}  // namespace zeno
