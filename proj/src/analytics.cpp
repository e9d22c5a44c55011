#include "qwalk/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

bool on_light_cone(int site, int time) {
  return time >= 0 && std::abs(site) <= time && ((site - time) % 2) == 0;
}

// k * log(x) with the 0 * log(0) = 0 convention.
double xlogy(double k, double x) { return k == 0.0 ? 0.0 : k * std::log(x); }

double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

void check_probability(double p, const char* where) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(where) + ": p must lie in [0, 1]");
  }
}

double plogp(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

double binomial_pmf(int site, int time, double p) {
  check_probability(p, "binomial_pmf");
  if (!on_light_cone(site, time)) {
    return 0.0;
  }
  const int up = (time + site) / 2;
  const int down = (time - site) / 2;
  const double log_mass = log_factorial(time) - log_factorial(up) - log_factorial(down) +
                          xlogy(up, p) + xlogy(down, 1.0 - p);
  return std::exp(log_mass);
}

Pmf binomial_distribution(int time, double p) {
  if (time < 0) {
    throw std::invalid_argument("binomial_distribution: negative time");
  }
  std::vector<double> mass(static_cast<std::size_t>(time) + 1);
  for (std::size_t i = 0; i < mass.size(); ++i) {
    mass[i] = binomial_pmf(2 * static_cast<int>(i) - time, time, p);
  }
  return Pmf(time, -time, std::move(mass));
}

Amplitudes closed_form_amplitudes(int site, int time, double p) {
  check_probability(p, "closed_form_amplitudes");
  if (time < 1 || !on_light_cone(site, time)) {
    throw OffSupportError("closed_form_amplitudes: (n=" + std::to_string(site) +
                          ", t=" + std::to_string(time) + ") is off the light cone");
  }
  if (site == time) {
    return {std::pow(p, time / 2.0), 0.0};
  }
  if (site == -time) {
    return {0.0, std::pow(1.0 - p, time / 2.0)};
  }
  const double weight = xlogy((time + site) / 4.0, p) + xlogy((time - site) / 4.0, 1.0 - p);
  const double log_plus =
      log_factorial(time - 1) - log_factorial((time + site - 2) / 2) - log_factorial((time - site) / 2);
  const double log_minus =
      log_factorial(time - 1) - log_factorial((time + site) / 2) - log_factorial((time - site - 2) / 2);
  return {std::exp(0.5 * log_plus + weight), std::exp(0.5 * log_minus + weight)};
}

GaussParams gauss_params(double p) {
  check_probability(p, "gauss_params");
  return {2.0 * p - 1.0, 4.0 * p * (1.0 - p)};
}

double gaussian_approx(int site, int time, double p) {
  if (p <= 0.0 || p >= 1.0) {
    throw std::domain_error("gaussian_approx: degenerate width for p=" + std::to_string(p));
  }
  if (time < 1) {
    throw std::domain_error("gaussian_approx: requires t >= 1");
  }
  const auto [mu, sigma2] = gauss_params(p);
  const double spread = sigma2 * time;
  const double d = site - mu * time;
  return 2.0 / std::sqrt(2.0 * std::numbers::pi * spread) * std::exp(-d * d / (2.0 * spread));
}

ReducedDensity reduced_density(const WalkState& state) {
  const auto plus = state.plus_amplitudes();
  const auto minus = state.minus_amplitudes();
  ReducedDensity rd{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < plus.size(); ++i) {
    rd.p_plus += plus[i] * plus[i];
    rd.p_minus += minus[i] * minus[i];
    rd.q_offdiag += plus[i] * minus[i];
  }
  return rd;
}

std::pair<double, double> density_eigenvalues(const ReducedDensity& rd) {
  constexpr double tol = 1e-12;
  if (std::abs(rd.p_plus + rd.p_minus - 1.0) > tol || rd.p_plus < -tol || rd.p_minus < -tol) {
    throw InvalidDensityError("density_eigenvalues: diagonal is not a probability pair");
  }
  const double discriminant = 0.25 - rd.p_plus * rd.p_minus + rd.q_offdiag * rd.q_offdiag;
  if (discriminant < -tol || discriminant > 0.25 + tol) {
    throw InvalidDensityError("density_eigenvalues: matrix is not positive semidefinite");
  }
  const double root = std::sqrt(std::clamp(discriminant, 0.0, 0.25));
  return {0.5 + root, 0.5 - root};
}

double entanglement_entropy(const ReducedDensity& rd) {
  const auto [upper, lower] = density_eigenvalues(rd);
  return -plogp(upper) - plogp(lower);
}

double entropy_asymptote(int time) {
  if (time < 1) {
    throw std::domain_error("entropy_asymptote: requires t >= 1");
  }
  const double x = 4.0 * time;
  return std::log2(x) / x;
}

}  // namespace qwalk
