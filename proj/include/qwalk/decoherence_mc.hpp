#pragma once

// Monte Carlo ensemble for the decohered walk: after every unitary step the
// position is measured with probability q and the chirality is reset to
// (|+> + |->) / sqrt(2). Between measurements the full wave function is kept.

#include <cstdint>
#include <vector>

#include "qwalk/lattice_state.hpp"
#include "qwalk/random_stream.hpp"

namespace qwalk {

struct DecoherenceConfig {
  double p = 0.5;
  double q = 0.0;  // measurement probability per step
  int t_max = 100;
  std::uint64_t trials = 100000;
  std::uint64_t master_seed = 1;
  // Accumulate pmf(state) at t_max instead of sampling a final position.
  bool exact_readout = false;
};

// Throws std::invalid_argument for out-of-range fields and std::overflow_error
// when trials * t_max does not fit in 64 bits.
void validate(const DecoherenceConfig& config);

struct EnsembleResult {
  Pmf empirical_pmf;
  double mean;
  double variance;
  std::uint64_t trials;
  // Final-position histogram, slot i <-> site 2i - t_max. Empty in exact-readout mode.
  std::vector<std::uint64_t> counts;
};

// Final state of one realization, before the readout.
WalkState run_trajectory_state(const DecoherenceConfig& config, RandomStream& stream);

// One realization ending with a sampled position readout at t_max.
int run_trajectory(const DecoherenceConfig& config, RandomStream& stream);

// Trial i always runs on make_stream(master_seed, i), and tallies are merged
// in a fixed block order, so the result is bit-identical for any thread count.
// threads == 0 uses std::thread::hardware_concurrency().
EnsembleResult run_ensemble(const DecoherenceConfig& config, unsigned threads = 1);

// Counts strict local maxima of the 3-point smoothed PMF whose topographic
// prominence exceeds 2% of the smoothed peak; bimodal iff there are at least two.
// Throws std::invalid_argument on an empty PMF.
bool detect_bimodality(const Pmf& dist);

}  // namespace qwalk
