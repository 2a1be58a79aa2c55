#ifndef POLYPHASE_THRESHOLDS_HPP
#define POLYPHASE_THRESHOLDS_HPP

// The maximal operator M[.] over the admissible rectangle
// nu in [delta,1), gamma in [0,rho], and the phase transitions
// rho_S / rho_W as first zeros of the associated maximal functions.

#include <vector>

#include "polyphase/exponents.hpp"

namespace polyphase {

enum class TransitionKind { Strong, Weak };

struct PhaseSample {
  double delta;
  double rho;
};

struct PhaseCurve {
  Family family;
  TransitionKind kind;
  std::vector<PhaseSample> samples;  // deltas strictly increasing
};

// sup over the rectangle of Psi_net (Strong) or Psi_net - Psi_face (Weak);
// coarse grid then golden-section refinement in each coordinate.
// rho <= 0 yields -inf (only the gamma = 0 sentinel line is admissible).
double maximal(Family family, TransitionKind kind, double delta, double rho,
               int grid = 64);

// Smallest rho with maximal(...) = 0.  The strong objective crosses zero
// transversally; the weak objective attains zero tangentially (its global
// maximum over the rectangle is 0 at the transition), so the first zero is
// located as the argmax of the gamma-section sup with a |value| <= 1e-6
// tangency check.
double rho_threshold(Family family, TransitionKind kind, double delta);

// Small-delta comparison curves: |2 log delta|^{-1} (Weak),
// |2e log(delta 2 sqrt(pi))|^{-1} (Strong simplex),
// |2e log(delta sqrt(pi))|^{-1} (Strong cross-polytope).
double asymptotic_rho(Family family, TransitionKind kind, double delta);

PhaseCurve phase_curve(Family family, TransitionKind kind,
                       const std::vector<double>& delta_grid);

}  // namespace polyphase

#endif
