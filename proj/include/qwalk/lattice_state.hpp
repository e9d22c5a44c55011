#pragma once

// Two-component real wave function of a walker on the integer line.
//
// Every state reachable from the origin lives on sites with the same parity
// as t, so amplitudes are stored parity-compressed: slot i holds site
// first_site() + 2 * i. A walk started at the origin has first_site() == -t,
// giving the slot/site mapping i <-> 2 * i - t that the CSV writers use.

#include <cstddef>
#include <span>
#include <vector>

namespace qwalk {

class WalkState {
 public:
  // Throws std::invalid_argument on negative time, empty or mismatched arrays.
  WalkState(int time, int first_site, std::vector<double> plus, std::vector<double> minus);

  int time() const noexcept { return time_; }
  int first_site() const noexcept { return first_site_; }
  int last_site() const noexcept { return site_at(plus_.size() - 1); }
  std::size_t size() const noexcept { return plus_.size(); }
  int site_at(std::size_t slot) const noexcept {
    return first_site_ + 2 * static_cast<int>(slot);
  }

  // Amplitudes at an arbitrary site; zero anywhere off the stored grid.
  double plus(int site) const noexcept;
  double minus(int site) const noexcept;

  std::span<const double> plus_amplitudes() const noexcept { return plus_; }
  std::span<const double> minus_amplitudes() const noexcept { return minus_; }

  // True when the occupied sites share the parity of the time index.
  bool has_time_parity() const noexcept;

  double norm_squared() const noexcept;

 private:
  // Slot index for `site`, or -1 when the site is off the grid.
  std::ptrdiff_t slot_of(int site) const noexcept;

  int time_;
  int first_site_;
  std::vector<double> plus_;
  std::vector<double> minus_;
};

// Probability mass over sites at a fixed time, same compressed layout as WalkState.
class Pmf {
 public:
  // Throws std::invalid_argument on empty input or negative mass.
  Pmf(int time, int first_site, std::vector<double> mass);

  int time() const noexcept { return time_; }
  int first_site() const noexcept { return first_site_; }
  int last_site() const noexcept { return site_at(mass_.size() - 1); }
  std::size_t size() const noexcept { return mass_.size(); }
  int site_at(std::size_t slot) const noexcept {
    return first_site_ + 2 * static_cast<int>(slot);
  }

  double mass(int site) const noexcept;
  std::span<const double> masses() const noexcept { return mass_; }
  double total() const noexcept;

 private:
  int time_;
  int first_site_;
  std::vector<double> mass_;
};

// |psi>_0 = (|+> + |->) / sqrt(2) at the origin.
WalkState initial_state();

Pmf pmf(const WalkState& state);

// Raw moment sum_n n^k rho(n). Throws std::invalid_argument for k < 1.
double moment(const Pmf& dist, int k);

double mean_position(const Pmf& dist);

// Delta X = sqrt(<X^2> - <X>^2), evaluated through the centered second moment.
double position_uncertainty(const Pmf& dist);

// Throws IncomparableStatesError when the times differ.
double inner_product(const WalkState& a, const WalkState& b);

}  // namespace qwalk
