#pragma once

// Inhomogeneous, time-dependent coin whose walk reproduces the binomial
// distribution with step-up probability p, plus the flux bookkeeping that
// ties the coin to the drift of <X>.

#include "qwalk/lattice_state.hpp"

namespace qwalk {

// Bias parameter p in [0, 1]. Construction throws std::invalid_argument otherwise.
class CoinSpec {
 public:
  explicit CoinSpec(double p);

  double p() const noexcept { return p_; }
  double sqrt_half_p() const noexcept { return sqrt_half_p_; }
  double sqrt_half_q() const noexcept { return sqrt_half_q_; }

 private:
  double p_;
  double sqrt_half_p_;  // sqrt(p / 2)
  double sqrt_half_q_;  // sqrt((1 - p) / 2)
};

struct CoinAngles {
  double cos_theta;
  double sin_theta;
};

// theta_{n,t}, evaluated from the closed form on every call. (0, 0) uses the
// canonical convention that maps |psi>_0 onto sqrt(p)|+,1> + sqrt(1-p)|-,-1>.
// Throws OffSupportError for |n| > t or n != t (mod 2).
CoinAngles coin_angle(int site, int time, const CoinSpec& spec);

// One application of T_t = S U_t.
// Throws OffSupportError if the state carries amplitude where the coin is undefined.
WalkState step(const WalkState& state, const CoinSpec& spec);

// `steps` successive applications of step(). Throws std::invalid_argument for steps < 0.
WalkState evolve(WalkState state, const CoinSpec& spec, int steps);

// Shift S at fixed time: |+, n> -> |+, n+1>, |-, n> -> |-, n-1>.
WalkState shift(const WalkState& state);

// Net probability flux J(n, t) out of `site`; zero where the walker is absent.
double flux(const WalkState& state, const CoinSpec& spec, int site);

double total_flux(const WalkState& state, const CoinSpec& spec);

// <X>_{t+1} - <X>_t - sum_n J(n, t).
double ehrenfest_residual(const WalkState& state, const CoinSpec& spec);

}  // namespace qwalk
