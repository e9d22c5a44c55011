#pragma once

// Projective measurements of chirality and position, and the unitary protocol
// that undoes a chirality measurement whose outcome is known.

#include <array>

#include "qwalk/lattice_state.hpp"
#include "qwalk/random_stream.hpp"

namespace qwalk {

enum class Chirality { plus, minus };

Chirality opposite(Chirality c) noexcept;

struct ChiralityOutcome {
  Chirality sign;
  double probability;  // Born probability of this branch
};

struct ChiralityCollapse {
  ChiralityOutcome outcome;
  WalkState state;
};

// Deterministic branch: keeps the requested component and renormalizes it.
// Throws std::domain_error if that branch has zero probability.
ChiralityCollapse project_chirality(const WalkState& state, Chirality branch);

// Samples the branch with its Born probability, then projects.
ChiralityCollapse measure_chirality(const WalkState& state, RandomStream& rng);

// Real 2x2 coin acting identically on every site, rows/columns ordered (+, -).
using CoinMatrix = std::array<std::array<double, 2>, 2>;

WalkState apply_homogeneous_coin(const WalkState& state, const CoinMatrix& coin);

// L: n -> n - 1 and R: n -> n + 1 on both chirality components.
WalkState translate(const WalkState& state, int offset);

// Recovery unitary for one branch: L S V+ for `plus_branch`, R S V- for `minus_branch`.
// It is unitary on any input; it reverses the measurement only for collapsed
// states of the classical-like walk with the same p.
class RecoveryOp {
 public:
  enum class Kind { plus_branch, minus_branch };

  RecoveryOp(Kind kind, double p);

  static RecoveryOp for_outcome(Chirality sign, double p);

  Kind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }

  // V+ = [[sqrt p, sqrt(1-p)], [sqrt(1-p), -sqrt p]], V- = [[-sqrt(1-p), sqrt p], [sqrt p, sqrt(1-p)]].
  CoinMatrix coin() const noexcept;

  WalkState apply(const WalkState& state) const;

 private:
  Kind kind_;
  double p_;
};

WalkState recover(const WalkState& collapsed, const ChiralityOutcome& outcome, double p);

// Applies the protocol of the other branch; the result is orthogonal to the
// pre-measurement state.
WalkState wrong_recover(const WalkState& collapsed, const ChiralityOutcome& outcome, double p);

struct WrongRecoveryDemo {
  WalkState psi;  // |psi>_1
  WalkState phi;  // L S V+ applied to the minus-branch collapse of |psi>_1
  double overlap;
};

// Requires 0 < p < 1, throws std::invalid_argument otherwise.
WrongRecoveryDemo wrong_recover_demo(double p);

struct PositionCollapse {
  int site;
  WalkState state;
};

// Samples a site from pmf(state) and returns the walker pinned there with its
// chirality reset to (|+> + |->) / sqrt(2).
PositionCollapse measure_position(const WalkState& state, RandomStream& rng);

// Localized state at `site` with the reset chirality.
WalkState localized_state(int time, int site);

}  // namespace qwalk
