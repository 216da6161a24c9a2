#include "zeno/oracle.hpp"

#include <cmath>

#include "zeno/kahan.hpp"

namespace zeno {

namespace {

/// Error-free product: returns a*b and writes the rounding remainder.
double two_prod(double a, double b, double& err) {
  double p = a * b;
  err = std::fma(a, b, -p);
  return p;
}

/// Compensated a1*b1 + a2*b2 + a3*b3 + a4*b4.
double dot4(double a1, double b1, double a2, double b2, double a3, double b3,
            double a4, double b4) {
  double e1, e2, e3, e4;
  double p1 = two_prod(a1, b1, e1);
  double p2 = two_prod(a2, b2, e2);
  double p3 = two_prod(a3, b3, e3);
  double p4 = two_prod(a4, b4, e4);
  KahanSum s;
  s.add(p1);
  s.add(p2);
  s.add(p3);
  s.add(p4);
  s.add(e1);
  s.add(e2);
  s.add(e3);
  s.add(e4);
  return s.value();
}

/// a*x + b*y for complex coefficients, compensated per component.
cplx mul_add(cplx a, cplx x, cplx b, cplx y) {
  double re = dot4(a.real(), x.real(), -a.imag(), x.imag(), b.real(), y.real(),
                   -b.imag(), y.imag());
  double im = dot4(a.real(), x.imag(), a.imag(), x.real(), b.real(), y.imag(),
                   b.imag(), y.real());
  return {re, im};
}

}  // namespace

PulseSequence PulseSequence::free_evolution(double t) {
  return {{PulseStep::evolve(t)}};
}

PulseSequence PulseSequence::modulation(double tau, long n) {
  PulseSequence seq;
  seq.steps.reserve(static_cast<std::size_t>(2 * n));
  for (long k = 0; k < n; ++k) {
    seq.steps.push_back(PulseStep::evolve(tau));
    seq.steps.push_back(PulseStep::z_pulse());
  }
  return seq;
}

PulseSequence PulseSequence::measurement(double tau, long n) {
  PulseSequence seq;
  seq.steps.reserve(static_cast<std::size_t>(2 * n));
  for (long k = 0; k < n; ++k) {
    seq.steps.push_back(PulseStep::evolve(tau));
    seq.steps.push_back(PulseStep::project());
  }
  return seq;
}

PulseSequence PulseSequence::mixed(double tau, long n) {
  PulseSequence seq;
  seq.steps.reserve(static_cast<std::size_t>(2 * n));
  for (long k = 1; k <= n; ++k) {
    seq.steps.push_back(PulseStep::evolve(tau));
    seq.steps.push_back(k % 2 == 1 ? PulseStep::z_pulse()
                                   : PulseStep::project());
  }
  return seq;
}

SpinState evolve(const PulseSequence& seq, const SpinParams& spin,
                 SpinState state) {
  for (const PulseStep& step : seq.steps) {
    switch (step.kind) {
      case PulseStep::Kind::evolve: {
        Propagator2 u = one_period_propagator(spin, step.duration);
        cplx up = mul_add(u.u11, state.up, u.u12, state.down);
        cplx down = mul_add(u.u21, state.up, u.u22, state.down);
        state.up = up;
        state.down = down;
        break;
      }
      case PulseStep::Kind::z_pulse:
        state.down = -state.down;
        break;
      case PulseStep::Kind::project:
        state.down = 0.0;
        break;
    }
  }
  return state;
}

EnsembleAverages ensemble_evolve(const PulseSequence& seq,
                                 std::span<const double> omegas, double g) {
  if (omegas.empty()) return {};
  std::vector<double> survivals(omegas.size());
  std::vector<double> transitions(omegas.size());
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    SpinState final_state = evolve(seq, SpinParams{omegas[i], g});
    survivals[i] = final_state.survival();
    transitions[i] = final_state.transition();
  }
  return {compensated_mean(survivals), compensated_mean(transitions)};
}

}  // namespace zeno
