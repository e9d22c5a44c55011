#pragma once

// Subcommands of the `qwalk` tool. Each *_records function builds the rows a
// subcommand emits, so they can be exercised without going through argv.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/output.hpp"

namespace qwalk::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFlagError = 2;
inline constexpr int kExitInvariantViolation = 3;

// Largest tolerated |norm - 1| before a command aborts.
inline constexpr double kNormTolerance = 1e-10;

class FlagError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvolveOptions {
  double p = 0.5;
  int steps = 0;
};

struct EntropyOptions {
  double p = 0.5;
  int t_max = 100;
};

struct DecohereOptions {
  double p = 0.5;
  std::vector<double> q_values{0.0};
  int steps = 100;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  bool exact = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct RecoverDemoOptions {
  double p = 0.75;
  int t = 1;
  std::uint64_t seed = 1;
};

// Columns n, psi_plus, psi_minus, rho for n = -steps, -steps + 2, ..., steps.
Table evolve_records(const EvolveOptions& options);

// Columns t, S_c, asymptote for t = 1..t_max.
Table entropy_records(const EntropyOptions& options);

// Columns kind, q, n, rho, mean, variance, bimodal. Per q: one `pmf` row per
// site (n, rho filled) followed by one `summary` row (mean, variance, bimodal).
Table decohere_records(const DecohereOptions& options);

// Columns kind, n, psi_plus, psi_minus, value. `state` rows hold the
// pre-measurement wave function; `outcome` (+1 or -1), `outcome_probability`,
// `fidelity` and `wrong_overlap` rows carry a single value.
Table recover_demo_records(const RecoverDemoOptions& options);

// Thread count from QWALK_THREADS, or 0 (hardware concurrency) when unset or invalid.
unsigned default_thread_count();

// Entry point without the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
