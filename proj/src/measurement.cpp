#include "qwalk/measurement.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/coin_evolution.hpp"

namespace qwalk {

Chirality opposite(Chirality c) noexcept {
  return c == Chirality::plus ? Chirality::minus : Chirality::plus;
}

ChiralityCollapse project_chirality(const WalkState& state, Chirality branch) {
  const auto kept = branch == Chirality::plus ? state.plus_amplitudes() : state.minus_amplitudes();
  double probability = 0.0;
  for (double a : kept) {
    probability += a * a;
  }
  if (probability <= 0.0) {
    throw std::domain_error("project_chirality: branch has zero probability");
  }
  const double scale = 1.0 / std::sqrt(probability);
  std::vector<double> collapsed(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    collapsed[i] = kept[i] * scale;
  }
  std::vector<double> zeros(kept.size(), 0.0);
  const ChiralityOutcome outcome{branch, probability};
  if (branch == Chirality::plus) {
    return {outcome, WalkState(state.time(), state.first_site(), std::move(collapsed), std::move(zeros))};
  }
  return {outcome, WalkState(state.time(), state.first_site(), std::move(zeros), std::move(collapsed))};
}

ChiralityCollapse measure_chirality(const WalkState& state, RandomStream& rng) {
  double p_plus = 0.0;
  for (double a : state.plus_amplitudes()) {
    p_plus += a * a;
  }
  const double u = uniform01(rng) * state.norm_squared();
  return project_chirality(state, u < p_plus ? Chirality::plus : Chirality::minus);
}

WalkState apply_homogeneous_coin(const WalkState& state, const CoinMatrix& coin) {
  const auto plus = state.plus_amplitudes();
  const auto minus = state.minus_amplitudes();
  std::vector<double> next_plus(plus.size());
  std::vector<double> next_minus(minus.size());
  for (std::size_t i = 0; i < plus.size(); ++i) {
    next_plus[i] = coin[0][0] * plus[i] + coin[0][1] * minus[i];
    next_minus[i] = coin[1][0] * plus[i] + coin[1][1] * minus[i];
  }
  return WalkState(state.time(), state.first_site(), std::move(next_plus), std::move(next_minus));
}

WalkState translate(const WalkState& state, int offset) {
  const auto plus = state.plus_amplitudes();
  const auto minus = state.minus_amplitudes();
  return WalkState(state.time(), state.first_site() + offset,
                   std::vector<double>(plus.begin(), plus.end()),
                   std::vector<double>(minus.begin(), minus.end()));
}

RecoveryOp::RecoveryOp(Kind kind, double p) : kind_(kind), p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("RecoveryOp: p must lie in [0, 1], got " + std::to_string(p));
  }
}

RecoveryOp RecoveryOp::for_outcome(Chirality sign, double p) {
  return RecoveryOp(sign == Chirality::plus ? Kind::plus_branch : Kind::minus_branch, p);
}

CoinMatrix RecoveryOp::coin() const noexcept {
  const double a = std::sqrt(p_);
  const double b = std::sqrt(1.0 - p_);
  if (kind_ == Kind::plus_branch) {
    return {{{a, b}, {b, -a}}};
  }
  return {{{-b, a}, {a, b}}};
}

WalkState RecoveryOp::apply(const WalkState& state) const {
  const WalkState shifted = shift(apply_homogeneous_coin(state, coin()));
  return translate(shifted, kind_ == Kind::plus_branch ? -1 : +1);
}

WalkState recover(const WalkState& collapsed, const ChiralityOutcome& outcome, double p) {
  return RecoveryOp::for_outcome(outcome.sign, p).apply(collapsed);
}

WalkState wrong_recover(const WalkState& collapsed, const ChiralityOutcome& outcome, double p) {
  return RecoveryOp::for_outcome(opposite(outcome.sign), p).apply(collapsed);
}

WrongRecoveryDemo wrong_recover_demo(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("wrong_recover_demo: p must lie in (0, 1)");
  }
  WalkState psi = step(initial_state(), CoinSpec(p));
  const auto [outcome, collapsed] = project_chirality(psi, Chirality::minus);
  WalkState phi = wrong_recover(collapsed, outcome, p);
  const double overlap = inner_product(psi, phi);
  return {std::move(psi), std::move(phi), overlap};
}

WalkState localized_state(int time, int site) {
  const double amp = std::numbers::sqrt2 / 2.0;
  return WalkState(time, site, {amp}, {amp});
}

PositionCollapse measure_position(const WalkState& state, RandomStream& rng) {
  const auto plus = state.plus_amplitudes();
  const auto minus = state.minus_amplitudes();
  const double target = uniform01(rng) * state.norm_squared();
  double cumulative = 0.0;
  std::size_t chosen = state.size();
  for (std::size_t i = 0; i < plus.size(); ++i) {
    const double mass = plus[i] * plus[i] + minus[i] * minus[i];
    if (mass <= 0.0) {
      continue;
    }
    chosen = i;
    cumulative += mass;
    if (target < cumulative) {
      break;
    }
  }
  if (chosen == state.size()) {
    throw std::domain_error("measure_position: state carries no probability");
  }
  const int site = state.site_at(chosen);
  return {site, localized_state(state.time(), site)};
}

}  // namespace qwalk
