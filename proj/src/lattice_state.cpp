#include "qwalk/lattice_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

bool same_parity(int a, int b) { return ((a - b) % 2) == 0; }

}  // namespace

WalkState::WalkState(int time, int first_site, std::vector<double> plus,
                     std::vector<double> minus)
    : time_(time), first_site_(first_site), plus_(std::move(plus)), minus_(std::move(minus)) {
  if (time_ < 0) {
    throw std::invalid_argument("WalkState: negative time " + std::to_string(time_));
  }
  if (plus_.empty() || plus_.size() != minus_.size()) {
    throw std::invalid_argument("WalkState: amplitude arrays must be non-empty and equal length");
  }
}

std::ptrdiff_t WalkState::slot_of(int site) const noexcept {
  const long offset = static_cast<long>(site) - first_site_;
  if (offset < 0 || offset % 2 != 0) {
    return -1;
  }
  const auto slot = static_cast<std::size_t>(offset / 2);
  return slot < plus_.size() ? static_cast<std::ptrdiff_t>(slot) : -1;
}

double WalkState::plus(int site) const noexcept {
  const auto slot = slot_of(site);
  return slot < 0 ? 0.0 : plus_[static_cast<std::size_t>(slot)];
}

double WalkState::minus(int site) const noexcept {
  const auto slot = slot_of(site);
  return slot < 0 ? 0.0 : minus_[static_cast<std::size_t>(slot)];
}

bool WalkState::has_time_parity() const noexcept { return same_parity(first_site_, time_); }

double WalkState::norm_squared() const noexcept {
  double total = 0.0;
  for (std::size_t i = 0; i < plus_.size(); ++i) {
    total += plus_[i] * plus_[i] + minus_[i] * minus_[i];
  }
  return total;
}

Pmf::Pmf(int time, int first_site, std::vector<double> mass)
    : time_(time), first_site_(first_site), mass_(std::move(mass)) {
  if (mass_.empty()) {
    throw std::invalid_argument("Pmf: empty mass array");
  }
  if (std::any_of(mass_.begin(), mass_.end(), [](double m) { return !(m >= 0.0); })) {
    throw std::invalid_argument("Pmf: negative or NaN mass");
  }
}

double Pmf::mass(int site) const noexcept {
  const long offset = static_cast<long>(site) - first_site_;
  if (offset < 0 || offset % 2 != 0) {
    return 0.0;
  }
  const auto slot = static_cast<std::size_t>(offset / 2);
  return slot < mass_.size() ? mass_[slot] : 0.0;
}

double Pmf::total() const noexcept {
  double sum = 0.0;
  for (double m : mass_) {
    sum += m;
  }
  return sum;
}

WalkState initial_state() {
  const double amp = std::numbers::sqrt2 / 2.0;
  return WalkState(0, 0, {amp}, {amp});
}

Pmf pmf(const WalkState& state) {
  const auto plus = state.plus_amplitudes();
  const auto minus = state.minus_amplitudes();
  std::vector<double> mass(state.size());
  for (std::size_t i = 0; i < mass.size(); ++i) {
    mass[i] = plus[i] * plus[i] + minus[i] * minus[i];
  }
  return Pmf(state.time(), state.first_site(), std::move(mass));
}

double moment(const Pmf& dist, int k) {
  if (k < 1) {
    throw std::invalid_argument("moment: order must be >= 1, got " + std::to_string(k));
  }
  const auto mass = dist.masses();
  double total = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    total += std::pow(static_cast<double>(dist.site_at(i)), k) * mass[i];
  }
  return total;
}

double mean_position(const Pmf& dist) { return moment(dist, 1); }

double position_uncertainty(const Pmf& dist) {
  const double mu = mean_position(dist);
  const auto mass = dist.masses();
  double var = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    const double d = dist.site_at(i) - mu;
    var += d * d * mass[i];
  }
  return std::sqrt(var);
}

double inner_product(const WalkState& a, const WalkState& b) {
  if (a.time() != b.time()) {
    throw IncomparableStatesError("inner_product: states at t=" + std::to_string(a.time()) +
                                  " and t=" + std::to_string(b.time()));
  }
  if (!same_parity(a.first_site(), b.first_site())) {
    return 0.0;
  }
  const int lo = std::max(a.first_site(), b.first_site());
  const int hi = std::min(a.last_site(), b.last_site());
  double total = 0.0;
  for (int n = lo; n <= hi; n += 2) {
    total += a.plus(n) * b.plus(n) + a.minus(n) * b.minus(n);
  }
  return total;
}

}  // namespace qwalk
