#pragma once

#include <stdexcept>

namespace qwalk {

// Coin angles only exist on the light cone |n| <= t with n = t (mod 2).
class OffSupportError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inner products between states at different times are meaningless.
class IncomparableStatesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidDensityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qwalk
