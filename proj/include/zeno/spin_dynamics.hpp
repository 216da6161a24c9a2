#pragma once

#include <complex>

namespace zeno {

using cplx = std::complex<double>;

/// One spin of the ensemble: longitudinal detuning omega and transverse
/// coupling g, both in units of the spectral width Gamma.
struct SpinParams {
  double omega = 0.0;
  double g = 0.0;
};

/// Precession frequency Omega = sqrt((omega/2)^2 + g^2).
double rabi_frequency(const SpinParams& spin);

/// 2x2 complex matrix. Unitary for the free one-period propagator; cycle
/// operators containing a projection have an exactly zero bottom row.
struct Propagator2 {
  cplx u11{1.0, 0.0};
  cplx u12{0.0, 0.0};
  cplx u21{0.0, 0.0};
  cplx u22{1.0, 0.0};
};

Propagator2 operator*(const Propagator2& a, const Propagator2& b);

/// Collective pi-phase flip, diag(1, -1).
Propagator2 z_pulse_matrix();

/// Non-renormalized projection onto spin-up, diag(1, 0).
Propagator2 projector_matrix();

/// sin^2 of the composite rotation angle lambda accumulated per modulation
/// period: sin^2(lambda) = 1 - (omega/2 Omega)^2 sin^2(Omega tau).
struct LambdaAngle {
  double sin2_lambda = 1.0;
};

/// Free evolution over one delay tau:
///   u11 = cos(Omega tau) - i (omega/2 Omega) sin(Omega tau)
///   u12 = u21 = i (g/Omega) sin(Omega tau),  u22 = conj(u11).
Propagator2 one_period_propagator(const SpinParams& spin, double tau);

LambdaAngle lambda_angle(const SpinParams& spin, double tau);

/// Free-evolution transition probability (g^2/Omega^2) sin^2(Omega t).
double p0_single(const SpinParams& spin, double t);

/// Transition probability after n modulation periods, (Z U0)^n.
/// Closed form (g^2/Omega^2) sin^2(Omega tau) sin^2(n lambda)/sin^2(lambda)
/// is the contract for even n and n = 1; odd n >= 3 falls back to the
/// direct matrix product.
double pmod_single(const SpinParams& spin, double tau, long n);

/// Closed-form modulation probability with a real-valued pulse count.
/// Used by fixed-time crossing scans; coincides with pmod_single at the
/// integers.
double pmod_single_closed(const SpinParams& spin, double tau, double n);

/// Survival probability after n projective measurements, (P U0)^n applied
/// to spin-up: [1 - (g^2/Omega^2) sin^2(Omega tau)]^n.
double pmeas_single_survival(const SpinParams& spin, double tau, long n);

/// 1 - survival, evaluated without cancellation for tiny probabilities.
/// Real-valued n supports crossing scans.
double pmeas_single_transition(const SpinParams& spin, double tau, double n);

/// Survival after n/2 mixed cycles (P U0 Z U0), n even:
///   [1 - (omega^2 g^2/Omega^4) sin^4(Omega tau)]^(n/2).
/// Throws std::invalid_argument for odd n (the oracle handles odd counts).
double pmix_single_survival(const SpinParams& spin, double tau, long n);

/// 1 - mixed survival with a real-valued pulse count (exponent n/2).
double pmix_single_transition(const SpinParams& spin, double tau, double n);

}  // namespace zeno
