#include "qwalk/coin_evolution.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

bool on_light_cone(int site, int time) {
  return std::abs(site) <= time && ((site - time) % 2) == 0;
}

[[noreturn]] void throw_off_support(int site, int time) {
  throw OffSupportError("coin angle undefined at n=" + std::to_string(site) +
                        ", t=" + std::to_string(time));
}

}  // namespace

CoinSpec::CoinSpec(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("CoinSpec: p must lie in [0, 1], got " + std::to_string(p));
  }
  sqrt_half_p_ = std::sqrt(p / 2.0);
  sqrt_half_q_ = std::sqrt((1.0 - p) / 2.0);
}

CoinAngles coin_angle(int site, int time, const CoinSpec& spec) {
  const double a = spec.sqrt_half_p();
  const double b = spec.sqrt_half_q();
  if (site == 0 && time == 0) {
    return {a - b, b + a};
  }
  if (!on_light_cone(site, time)) {
    throw_off_support(site, time);
  }
  const double t = time;
  const double up = std::sqrt((t + site) / t);    // sqrt(1 + n/t)
  const double down = std::sqrt((t - site) / t);  // sqrt(1 - n/t)
  return {a * up - b * down, b * up + a * down};
}

WalkState step(const WalkState& state, const CoinSpec& spec) {
  const auto plus = state.plus_amplitudes();
  const auto minus = state.minus_amplitudes();
  const std::size_t m = state.size();
  const int t = state.time();

  // Site n = first + 2i feeds n + 1 (slot i + 1) and n - 1 (slot i) of the new grid.
  std::vector<double> next_plus(m + 1, 0.0);
  std::vector<double> next_minus(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (plus[i] == 0.0 && minus[i] == 0.0) {
      continue;
    }
    const auto [c, s] = coin_angle(state.site_at(i), t, spec);
    next_plus[i + 1] = c * plus[i] + s * minus[i];
    next_minus[i] = s * plus[i] - c * minus[i];
  }
  return WalkState(t + 1, state.first_site() - 1, std::move(next_plus), std::move(next_minus));
}

WalkState evolve(WalkState state, const CoinSpec& spec, int steps) {
  if (steps < 0) {
    throw std::invalid_argument("evolve: negative step count " + std::to_string(steps));
  }
  for (int k = 0; k < steps; ++k) {
    state = step(state, spec);
  }
  return state;
}

WalkState shift(const WalkState& state) {
  const auto plus = state.plus_amplitudes();
  const auto minus = state.minus_amplitudes();
  const std::size_t m = state.size();
  std::vector<double> next_plus(m + 1, 0.0);
  std::vector<double> next_minus(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    next_plus[i + 1] = plus[i];
    next_minus[i] = minus[i];
  }
  return WalkState(state.time(), state.first_site() - 1, std::move(next_plus),
                   std::move(next_minus));
}

double flux(const WalkState& state, const CoinSpec& spec, int site) {
  const double up = state.plus(site);
  const double down = state.minus(site);
  if (up == 0.0 && down == 0.0) {
    return 0.0;
  }
  const auto [c, s] = coin_angle(site, state.time(), spec);
  const double cos2 = c * c - s * s;
  const double sin2 = 2.0 * s * c;
  return cos2 * (up * up - down * down) + 2.0 * sin2 * up * down;
}

double total_flux(const WalkState& state, const CoinSpec& spec) {
  double sum = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    sum += flux(state, spec, state.site_at(i));
  }
  return sum;
}

double ehrenfest_residual(const WalkState& state, const CoinSpec& spec) {
  const double before = mean_position(pmf(state));
  const double after = mean_position(pmf(step(state, spec)));
  return after - before - total_flux(state, spec);
}

}  // namespace qwalk
