#pragma once

// Test-only reference computations. None of these call step(), evolve() or
// the analytics closed forms, so they can check those independently.

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qwalk/coin_evolution.hpp"

namespace qwalk::oracle {

// Amplitudes at time t by summing over every chirality history: 2 initial
// chiralities times 2^t choices. Each history contributes the product of the
// coin matrix elements along its path.
inline std::map<int, std::pair<double, double>> path_sum_amplitudes(int t, double p) {
  const CoinSpec spec(p);
  const double start = 1.0 / std::sqrt(2.0);
  std::map<int, std::pair<double, double>> result;
  for (int c0 = 0; c0 < 2; ++c0) {
    for (std::uint64_t choices = 0; choices < (std::uint64_t{1} << t); ++choices) {
      int site = 0;
      int chirality = c0;  // 0: plus, 1: minus
      double amp = start;
      for (int k = 0; k < t; ++k) {
        const int next = static_cast<int>((choices >> k) & 1u);
        const auto [c, s] = coin_angle(site, k, spec);
        // U = [[c, s], [s, -c]] in the (+, -) basis; U[next][chirality].
        const double element = next == 0 ? (chirality == 0 ? c : s) : (chirality == 0 ? s : -c);
        amp *= element;
        chirality = next;
        site += next == 0 ? 1 : -1;
      }
      auto& slot = result[site];
      (chirality == 0 ? slot.first : slot.second) += amp;
    }
  }
  return result;
}

// Classical random walk PMF by enumerating all 2^t step sequences.
inline std::map<int, double> enumerated_binomial(int t, double p) {
  std::map<int, double> result;
  for (std::uint64_t steps = 0; steps < (std::uint64_t{1} << t); ++steps) {
    int site = 0;
    double weight = 1.0;
    for (int k = 0; k < t; ++k) {
      if ((steps >> k) & 1u) {
        ++site;
        weight *= p;
      } else {
        --site;
        weight *= 1.0 - p;
      }
    }
    result[site] += weight;
  }
  return result;
}

// Exact PMF of the walk measured after every step (q = 1). From a reset
// state pinned at (n, t) the walker moves right with probability
// |cos + sin|^2 / 2, so the process is a classical Markov chain.
inline std::map<int, double> always_measured_pmf(int t_max, double p) {
  const CoinSpec spec(p);
  std::map<int, double> dist{{0, 1.0}};
  for (int t = 0; t < t_max; ++t) {
    std::map<int, double> next;
    for (const auto& [site, mass] : dist) {
      const auto [c, s] = coin_angle(site, t, spec);
      const double right = (c + s) * (c + s) / 2.0;
      const double left = (s - c) * (s - c) / 2.0;
      next[site + 1] += mass * right;
      next[site - 1] += mass * left;
    }
    dist = std::move(next);
  }
  return dist;
}

}  // namespace qwalk::oracle
