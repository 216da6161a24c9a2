#pragma once

#include <span>
#include <vector>

#include "zeno/spin_dynamics.hpp"

namespace zeno {

/// Two-component spin amplitude. Norm is 1 under unitary-only sequences and
/// decreases only at projection steps.
struct SpinState {
  cplx up{1.0, 0.0};
  cplx down{0.0, 0.0};

  double norm2() const { return std::norm(up) + std::norm(down); }
  /// Probability of still being found in the initial spin-up state.
  double survival() const { return std::norm(up); }
  /// Total probability of having left the initial state (flips plus
  /// measured-out weight).
  double transition() const { return 1.0 - std::norm(up); }
};

struct PulseStep {
  enum class Kind { evolve, z_pulse, project };
  Kind kind = Kind::evolve;
  double duration = 0.0;

  static PulseStep evolve(double t) { return {Kind::evolve, t}; }
  static PulseStep z_pulse() { return {Kind::z_pulse, 0.0}; }
  static PulseStep project() { return {Kind::project, 0.0}; }
};

/// Ordered pulse program; any mix of steps is allowed, uniform or not.
struct PulseSequence {
  std::vector<PulseStep> steps;

  static PulseSequence free_evolution(double t);
  /// n periods of [evolve(tau), Z].
  static PulseSequence modulation(double tau, long n);
  /// n periods of [evolve(tau), project].
  static PulseSequence measurement(double tau, long n);
  /// Alternating pulses [evolve(tau), Z, evolve(tau), project, ...]; even n
  /// gives n/2 full cycles, odd n ends on the Z pulse.
  static PulseSequence mixed(double tau, long n);
};

/// Applies the step matrices in order to the initial state. Products use
/// compensated (fma-based) complex arithmetic so error stays bounded for
/// sequences beyond 10^4 steps.
SpinState evolve(const PulseSequence& seq, const SpinParams& spin,
                 SpinState initial = SpinState{});

struct EnsembleAverages {
  double survival = 1.0;
  double transition = 0.0;
};

/// Per-spin evolution averaged over explicit detunings; the reduction order
/// is fixed regardless of thread count.
EnsembleAverages ensemble_evolve(const PulseSequence& seq,
                                 std::span<const double> omegas, double g);

}  // namespace zeno
