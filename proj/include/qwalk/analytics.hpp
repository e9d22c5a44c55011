#pragma once

// Closed-form results for the classical-like walk: binomial PMF, exact
// amplitudes, the Gaussian limit, and the coin-space entanglement entropy.

#include <utility>

#include "qwalk/lattice_state.hpp"

namespace qwalk {

// t! / (((t+n)/2)! ((t-n)/2)!) p^((t+n)/2) (1-p)^((t-n)/2) on the light cone,
// zero elsewhere. Factorials go through lgamma, so t up to 1e4 is fine.
double binomial_pmf(int site, int time, double p);

// Whole binomial distribution at `time` laid out like an evolved state.
Pmf binomial_distribution(int time, double p);

struct Amplitudes {
  double plus;
  double minus;
};

// Exact psi_+(n, t), psi_-(n, t) for t >= 1, nonnegative roots.
// Throws OffSupportError off the light cone or for t < 1.
Amplitudes closed_form_amplitudes(int site, int time, double p);

struct GaussParams {
  double mu;      // drift per step, 2p - 1
  double sigma2;  // variance per step, 4p(1 - p)
};

GaussParams gauss_params(double p);

// (2 / sqrt(2 pi sigma^2 t)) exp(-(n - mu t)^2 / (2 sigma^2 t)). The factor 2
// accounts for only every other site being occupied.
// Throws std::domain_error for p in {0, 1} or t < 1.
double gaussian_approx(int site, int time, double p);

// Coin-space density matrix [[p_plus, q_offdiag], [q_offdiag, p_minus]].
struct ReducedDensity {
  double p_plus;
  double p_minus;
  double q_offdiag;
};

ReducedDensity reduced_density(const WalkState& state);

// lambda_+ >= lambda_-. Throws InvalidDensityError if the matrix is not a
// density matrix (trace off by more than 1e-12, or not positive semidefinite).
std::pair<double, double> density_eigenvalues(const ReducedDensity& rd);

// Von Neumann entropy in bits, with 0 log 0 = 0.
double entanglement_entropy(const ReducedDensity& rd);

// log2(4t) / (4t), the leading large-t behaviour of the entropy.
double entropy_asymptote(int time);

}  // namespace qwalk
