#include "qwalk/decoherence_mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "qwalk/coin_evolution.hpp"
#include "qwalk/measurement.hpp"

namespace qwalk {

namespace {

constexpr std::uint64_t kBlockSize = 4096;

struct BlockTally {
  std::vector<std::uint64_t> counts;
  std::vector<double> mass;
};

// Allocation-free trajectory state: two ping-pong buffer pairs sized for the
// horizon. Arithmetic and random draws mirror step() and measure_position()
// exactly, so results match run_trajectory() bit for bit.
class TrajectoryWorkspace {
 public:
  explicit TrajectoryWorkspace(int t_max)
      : plus_(static_cast<std::size_t>(t_max) + 1),
        minus_(plus_.size()),
        next_plus_(plus_.size()),
        next_minus_(plus_.size()) {}

  // Runs to t_max; afterwards [first_, first_ + 2 * size_) holds the final state.
  void run(const DecoherenceConfig& config, const CoinSpec& spec, RandomStream& stream) {
    reset(0, 0);
    for (int t = 0; t < config.t_max; ++t) {
      advance(t, spec);
      if (uniform01(stream) < config.q) {
        const int site = sample_site(stream);
        reset(t + 1, site);
      }
    }
  }

  int sample_site(RandomStream& stream) const {
    double norm = 0.0;
    for (std::size_t i = 0; i < size_; ++i) {
      norm += plus_[i] * plus_[i] + minus_[i] * minus_[i];
    }
    const double target = uniform01(stream) * norm;
    double cumulative = 0.0;
    std::size_t chosen = size_;
    for (std::size_t i = 0; i < size_; ++i) {
      const double mass = plus_[i] * plus_[i] + minus_[i] * minus_[i];
      if (mass <= 0.0) {
        continue;
      }
      chosen = i;
      cumulative += mass;
      if (target < cumulative) {
        break;
      }
    }
    return first_ + 2 * static_cast<int>(chosen);
  }

  int first_site() const noexcept { return first_; }
  std::size_t size() const noexcept { return size_; }
  double mass(std::size_t i) const noexcept {
    return plus_[i] * plus_[i] + minus_[i] * minus_[i];
  }

 private:
  void reset(int time, int site) {
    const WalkState pinned = localized_state(time, site);
    first_ = site;
    size_ = 1;
    plus_[0] = pinned.plus_amplitudes()[0];
    minus_[0] = pinned.minus_amplitudes()[0];
  }

  void advance(int t, const CoinSpec& spec) {
    std::fill_n(next_plus_.begin(), size_ + 1, 0.0);
    std::fill_n(next_minus_.begin(), size_ + 1, 0.0);
    for (std::size_t i = 0; i < size_; ++i) {
      if (plus_[i] == 0.0 && minus_[i] == 0.0) {
        continue;
      }
      const auto [c, s] = coin_angle(first_ + 2 * static_cast<int>(i), t, spec);
      next_plus_[i + 1] = c * plus_[i] + s * minus_[i];
      next_minus_[i] = s * plus_[i] - c * minus_[i];
    }
    plus_.swap(next_plus_);
    minus_.swap(next_minus_);
    --first_;
    ++size_;
  }

  std::vector<double> plus_;
  std::vector<double> minus_;
  std::vector<double> next_plus_;
  std::vector<double> next_minus_;
  int first_ = 0;
  std::size_t size_ = 1;
};

std::size_t slot_for(int site, int t_max) { return static_cast<std::size_t>((site + t_max) / 2); }

BlockTally run_block(const DecoherenceConfig& config, std::uint64_t first, std::uint64_t last) {
  const CoinSpec spec(config.p);
  const std::size_t width = static_cast<std::size_t>(config.t_max) + 1;
  BlockTally tally;
  if (config.exact_readout) {
    tally.mass.assign(width, 0.0);
  } else {
    tally.counts.assign(width, 0);
  }
  TrajectoryWorkspace workspace(config.t_max);
  for (std::uint64_t trial = first; trial < last; ++trial) {
    RandomStream stream = make_stream(config.master_seed, trial);
    workspace.run(config, spec, stream);
    if (config.exact_readout) {
      for (std::size_t i = 0; i < workspace.size(); ++i) {
        const int site = workspace.first_site() + 2 * static_cast<int>(i);
        tally.mass[slot_for(site, config.t_max)] += workspace.mass(i);
      }
    } else {
      ++tally.counts[slot_for(workspace.sample_site(stream), config.t_max)];
    }
  }
  return tally;
}

}  // namespace

void validate(const DecoherenceConfig& config) {
  if (!(config.p >= 0.0 && config.p <= 1.0)) {
    throw std::invalid_argument("decoherence config: p must lie in [0, 1]");
  }
  if (!(config.q >= 0.0 && config.q <= 1.0)) {
    throw std::invalid_argument("decoherence config: q must lie in [0, 1]");
  }
  if (config.t_max < 0) {
    throw std::invalid_argument("decoherence config: negative time horizon");
  }
  if (config.trials < 1) {
    throw std::invalid_argument("decoherence config: trials must be >= 1");
  }
  const auto horizon = static_cast<std::uint64_t>(config.t_max);
  if (horizon > 0 && config.trials > std::numeric_limits<std::uint64_t>::max() / horizon) {
    throw std::overflow_error("decoherence config: trials * t_max overflows");
  }
}

WalkState run_trajectory_state(const DecoherenceConfig& config, RandomStream& stream) {
  const CoinSpec spec(config.p);
  WalkState state = initial_state();
  for (int t = 0; t < config.t_max; ++t) {
    state = step(state, spec);
    // The q-coin is drawn every step so stream consumption does not depend on q.
    if (uniform01(stream) < config.q) {
      state = measure_position(state, stream).state;
    }
  }
  return state;
}

int run_trajectory(const DecoherenceConfig& config, RandomStream& stream) {
  const WalkState final_state = run_trajectory_state(config, stream);
  return measure_position(final_state, stream).site;
}

EnsembleResult run_ensemble(const DecoherenceConfig& config, unsigned threads) {
  validate(config);
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  const std::uint64_t blocks = (config.trials + kBlockSize - 1) / kBlockSize;
  std::vector<BlockTally> tallies(blocks);
  std::atomic<std::uint64_t> next_block{0};
  auto worker = [&] {
    for (std::uint64_t b = next_block++; b < blocks; b = next_block++) {
      const std::uint64_t first = b * kBlockSize;
      tallies[b] = run_block(config, first, std::min(first + kBlockSize, config.trials));
    }
  };
  const auto pool_size = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));
  if (pool_size <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(pool_size);
    for (unsigned i = 0; i < pool_size; ++i) {
      pool.emplace_back(worker);
    }
  }

  const std::size_t width = static_cast<std::size_t>(config.t_max) + 1;
  const double n_trials = static_cast<double>(config.trials);
  std::vector<double> mass(width, 0.0);
  std::vector<std::uint64_t> counts;
  if (config.exact_readout) {
    for (const auto& tally : tallies) {
      for (std::size_t i = 0; i < width; ++i) {
        mass[i] += tally.mass[i];
      }
    }
    for (double& m : mass) {
      m /= n_trials;
    }
  } else {
    counts.assign(width, 0);
    for (const auto& tally : tallies) {
      for (std::size_t i = 0; i < width; ++i) {
        counts[i] += tally.counts[i];
      }
    }
    for (std::size_t i = 0; i < width; ++i) {
      mass[i] = static_cast<double>(counts[i]) / n_trials;
    }
  }

  Pmf empirical(config.t_max, -config.t_max, std::move(mass));
  double mean = 0.0;
  for (std::size_t i = 0; i < width; ++i) {
    mean += empirical.site_at(i) * empirical.masses()[i];
  }
  double variance = 0.0;
  for (std::size_t i = 0; i < width; ++i) {
    const double d = empirical.site_at(i) - mean;
    variance += d * d * empirical.masses()[i];
  }
  return {std::move(empirical), mean, variance, config.trials, std::move(counts)};
}

bool detect_bimodality(const Pmf& dist) {
  const auto mass = dist.masses();
  const std::size_t m = mass.size();
  if (m == 0) {
    throw std::invalid_argument("detect_bimodality: empty pmf");
  }
  // Mass is zero beyond the stored sites; pad one zero on each side.
  std::vector<double> padded(m + 2, 0.0);
  std::copy(mass.begin(), mass.end(), padded.begin() + 1);
  std::vector<double> smooth(m + 2, 0.0);
  for (std::size_t i = 1; i <= m; ++i) {
    smooth[i] = (padded[i - 1] + padded[i] + padded[i + 1]) / 3.0;
  }
  const double peak = *std::max_element(smooth.begin(), smooth.end());
  const double threshold = 0.02 * peak;

  int modes = 0;
  for (std::size_t i = 1; i <= m;) {
    if (!(smooth[i] > smooth[i - 1])) {
      ++i;
      continue;
    }
    // A flat top counts once, when the profile drops on both sides of it.
    std::size_t end = i;
    while (end + 1 <= m && smooth[end + 1] == smooth[i]) {
      ++end;
    }
    if (smooth[end + 1] < smooth[i]) {
      // Walk outward until the profile rises above this peak; the higher of
      // the two lowest points reached sets the prominence.
      double left_base = smooth[i];
      for (std::size_t j = i; j-- > 0 && smooth[j] <= smooth[i];) {
        left_base = std::min(left_base, smooth[j]);
      }
      double right_base = smooth[i];
      for (std::size_t j = end + 1; j < smooth.size() && smooth[j] <= smooth[i]; ++j) {
        right_base = std::min(right_base, smooth[j]);
      }
      if (smooth[i] - std::max(left_base, right_base) > threshold) {
        ++modes;
      }
    }
    i = end + 1;
  }
  return modes >= 2;
}

}  // namespace qwalk
