#include "qwalk/analytics.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qwalk/coin_evolution.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk;

namespace {

double lgamma_ratio_root(int t, int a, int b) {
  return std::exp(0.5 * (std::lgamma(t) - std::lgamma(a + 1.0) - std::lgamma(b + 1.0)));
}

}  // namespace

TEST(BinomialPmf, small_cases) {
  EXPECT_NEAR(binomial_pmf(0, 2, 0.5), 0.5, 1e-15);
  for (double p : {0.0, 0.3, 1.0}) {
    for (int t : {0, 1, 9}) {
      EXPECT_NEAR(binomial_pmf(t, t, p), std::pow(p, t), 1e-15);
    }
  }
  const auto oracle = oracle::enumerated_binomial(3, 0.75);
  ASSERT_NEAR(oracle.at(1), 0.421875, 1e-15);
  EXPECT_NEAR(binomial_pmf(1, 3, 0.75), 0.421875, 1e-14);
}

TEST(BinomialPmf, matches_enumeration) {
  for (double p : {0.0, 0.2, 0.5, 0.75, 1.0}) {
    for (int t = 0; t <= 14; ++t) {
      const auto oracle = oracle::enumerated_binomial(t, p);
      for (int n = -t; n <= t; n += 2) {
        const auto it = oracle.find(n);
        ASSERT_NEAR(binomial_pmf(n, t, p), it == oracle.end() ? 0.0 : it->second, 1e-14);
      }
    }
  }
}

TEST(BinomialPmf, off_support_is_zero) {
  EXPECT_EQ(binomial_pmf(1, 2, 0.5), 0.0);
  EXPECT_EQ(binomial_pmf(5, 3, 0.5), 0.0);
  EXPECT_EQ(binomial_pmf(0, -2, 0.5), 0.0);
  EXPECT_THROW(binomial_pmf(0, 2, 1.5), std::invalid_argument);
}

TEST(BinomialPmf, large_time_stays_finite) {
  const Pmf dist = binomial_distribution(10000, 0.3);
  EXPECT_NEAR(dist.total(), 1.0, 1e-10);
  EXPECT_NEAR(mean_position(dist), 0.4 * -10000, 1e-6);
}

TEST(ClosedForm, first_step) {
  const auto a = closed_form_amplitudes(1, 1, 0.75);
  EXPECT_NEAR(a.plus, std::sqrt(0.75), 1e-15);
  EXPECT_EQ(a.minus, 0.0);
  const auto b = closed_form_amplitudes(-1, 1, 0.75);
  EXPECT_EQ(b.plus, 0.0);
  EXPECT_NEAR(b.minus, 0.5, 1e-15);
}

TEST(ClosedForm, left_edge_has_no_plus_component) {
  for (int t : {1, 2, 50}) {
    EXPECT_EQ(closed_form_amplitudes(-t, t, 0.4).plus, 0.0);
    EXPECT_EQ(closed_form_amplitudes(t, t, 0.4).minus, 0.0);
  }
}

TEST(ClosedForm, off_support_is_rejected) {
  EXPECT_THROW(closed_form_amplitudes(0, 0, 0.5), OffSupportError);
  EXPECT_THROW(closed_form_amplitudes(4, 2, 0.5), OffSupportError);
  EXPECT_THROW(closed_form_amplitudes(1, 2, 0.5), OffSupportError);
}

TEST(ClosedForm, interior_formula) {
  // Direct factorial-ratio evaluation of psi_+ and psi_- in the interior.
  const double p = 0.75;
  for (int t = 2; t <= 40; ++t) {
    for (int n = -t + 2; n <= t - 2; n += 2) {
      const double weight = std::pow(p, (t + n) / 4.0) * std::pow(1 - p, (t - n) / 4.0);
      const auto a = closed_form_amplitudes(n, t, p);
      ASSERT_NEAR(a.plus, lgamma_ratio_root(t, (t + n - 2) / 2, (t - n) / 2) * weight, 1e-13);
      ASSERT_NEAR(a.minus, lgamma_ratio_root(t, (t + n) / 2, (t - n - 2) / 2) * weight, 1e-13);
    }
  }
}

TEST(ClosedForm, redundancy_identities) {
  for (double p : {0.25, 0.5, 0.75}) {
    for (int t = 1; t <= 200; ++t) {
      for (int n = -t; n <= t; n += 2) {
        const auto a = closed_form_amplitudes(n, t, p);
        ASSERT_NEAR(a.plus, std::sqrt(p) * std::sqrt(binomial_pmf(n - 1, t - 1, p)), 1e-11);
        ASSERT_NEAR(a.minus, std::sqrt(1 - p) * std::sqrt(binomial_pmf(n + 1, t - 1, p)), 1e-11);
      }
    }
  }
}

TEST(ClosedForm, normalized) {
  for (double p : {0.25, 0.5, 0.75}) {
    for (int t = 1; t <= 200; ++t) {
      double norm = 0.0;
      for (int n = -t; n <= t; n += 2) {
        const auto a = closed_form_amplitudes(n, t, p);
        norm += a.plus * a.plus + a.minus * a.minus;
      }
      ASSERT_NEAR(norm, 1.0, 1e-11) << "p=" << p << " t=" << t;
    }
  }
}

TEST(ClosedForm, shifted_mirror_when_unbiased) {
  for (int t = 1; t <= 200; ++t) {
    for (int n = -t; n <= t + 2; n += 2) {
      const double up = std::abs(n) <= t ? closed_form_amplitudes(n, t, 0.5).plus : 0.0;
      const double down = std::abs(n - 2) <= t ? closed_form_amplitudes(n - 2, t, 0.5).minus : 0.0;
      ASSERT_NEAR(up, down, 1e-13) << "n=" << n << " t=" << t;
    }
  }
}

TEST(ClosedForm, evolution_agrees_including_sign) {
  for (double p : {0.25, 0.5, 0.75}) {
    const CoinSpec spec(p);
    WalkState s = step(initial_state(), spec);
    for (int t = 1; t <= 200; ++t) {
      for (int n = -t; n <= t; n += 2) {
        const auto a = closed_form_amplitudes(n, t, p);
        ASSERT_NEAR(s.plus(n), a.plus, 1e-11) << "p=" << p << " t=" << t << " n=" << n;
        ASSERT_NEAR(s.minus(n), a.minus, 1e-11) << "p=" << p << " t=" << t << " n=" << n;
      }
      s = step(s, spec);
    }
  }
}

TEST(Gaussian, peak_value_and_symmetry) {
  const auto [mu, sigma2] = gauss_params(0.75);
  EXPECT_DOUBLE_EQ(mu, 0.5);
  EXPECT_DOUBLE_EQ(sigma2, 0.75);
  EXPECT_NEAR(gaussian_approx(50, 100, 0.75), 2.0 / std::sqrt(2.0 * M_PI * 75.0), 1e-15);
  for (int n = 0; n <= 40; n += 2) {
    EXPECT_DOUBLE_EQ(gaussian_approx(n, 40, 0.5), gaussian_approx(-n, 40, 0.5));
  }
}

TEST(Gaussian, close_to_binomial_at_t100) {
  double worst = 0.0;
  for (int n = -100; n <= 100; n += 2) {
    worst = std::max(worst, std::abs(binomial_pmf(n, 100, 0.75) - gaussian_approx(n, 100, 0.75)));
  }
  EXPECT_LT(worst, 0.005);
}

TEST(Gaussian, degenerate_bias_is_rejected) {
  EXPECT_THROW(gaussian_approx(0, 10, 0.0), std::domain_error);
  EXPECT_THROW(gaussian_approx(0, 10, 1.0), std::domain_error);
  EXPECT_THROW(gaussian_approx(0, 0, 0.5), std::domain_error);
}

TEST(ReducedDensity, diagonal_is_bias) {
  for (double p : {0.25, 0.5, 0.75}) {
    const CoinSpec spec(p);
    WalkState s = step(initial_state(), spec);
    for (int t = 1; t <= 200; ++t) {
      const auto rd = reduced_density(s);
      ASSERT_NEAR(rd.p_plus, p, 1e-11);
      ASSERT_NEAR(rd.p_minus, 1 - p, 1e-11);
      ASSERT_LE(std::abs(rd.q_offdiag), std::sqrt(rd.p_plus * rd.p_minus) + 1e-12);
      s = step(s, spec);
    }
  }
}

TEST(ReducedDensity, no_coherence_after_first_step) {
  EXPECT_EQ(reduced_density(step(initial_state(), CoinSpec(0.3))).q_offdiag, 0.0);
}

TEST(ReducedDensity, coherence_saturates) {
  const double p = 0.75;
  const double limit = std::sqrt(p * (1 - p));
  const WalkState s = evolve(initial_state(), CoinSpec(p), 2000);
  const double q_late = reduced_density(s).q_offdiag;
  const double q_early = reduced_density(evolve(initial_state(), CoinSpec(p), 200)).q_offdiag;
  EXPECT_LT(limit - q_late, limit - q_early);
  EXPECT_NEAR(q_late, limit, 1e-3);
}

TEST(Entropy, maximal_at_first_step) {
  EXPECT_EQ(entanglement_entropy(reduced_density(step(initial_state(), CoinSpec(0.5)))), 1.0);
  const auto rd = reduced_density(step(initial_state(), CoinSpec(0.75)));
  const auto [upper, lower] = density_eigenvalues(rd);
  EXPECT_NEAR(upper, 0.75, 1e-15);
  EXPECT_NEAR(lower, 0.25, 1e-15);
  const double binary = -0.75 * std::log2(0.75) - 0.25 * std::log2(0.25);
  EXPECT_NEAR(entanglement_entropy(rd), binary, 1e-14);
  EXPECT_NEAR(entanglement_entropy(rd), 0.811278, 1e-6);
}

TEST(Entropy, pure_coin_state_has_zero_entropy) {
  EXPECT_EQ(entanglement_entropy({1.0, 0.0, 0.0}), 0.0);
  EXPECT_EQ(entanglement_entropy({0.5, 0.5, 0.5}), 0.0);
  // tiny negative discriminant from rounding is clamped
  EXPECT_EQ(entanglement_entropy({0.5, 0.5, 0.5 + 1e-15}), 0.0);
}

TEST(Entropy, invalid_density_is_rejected) {
  EXPECT_THROW(entanglement_entropy({0.6, 0.6, 0.0}), InvalidDensityError);
  EXPECT_THROW(entanglement_entropy({0.5, 0.5, 0.6}), InvalidDensityError);
}

TEST(Entropy, decreases_monotonically) {
  for (double p : {0.5, 0.75}) {
    const CoinSpec spec(p);
    WalkState s = step(initial_state(), spec);
    double previous = entanglement_entropy(reduced_density(s));
    for (int t = 2; t <= 200; ++t) {
      s = step(s, spec);
      const double current = entanglement_entropy(reduced_density(s));
      ASSERT_LE(current, previous) << "p=" << p << " t=" << t;
      previous = current;
    }
    EXPECT_LT(previous, 0.05);
  }
}

TEST(Entropy, asymptote_values) {
  EXPECT_DOUBLE_EQ(entropy_asymptote(1), 0.5);
  EXPECT_NEAR(entropy_asymptote(1000), 0.0029914460711655, 1e-15);
  EXPECT_THROW(entropy_asymptote(0), std::domain_error);
}

TEST(Entropy, tracks_asymptote_independently_of_bias) {
  std::vector<double> ratio_half;
  std::vector<double> ratio_biased;
  for (double p : {0.5, 0.75}) {
    auto& ratios = p == 0.5 ? ratio_half : ratio_biased;
    const CoinSpec spec(p);
    WalkState s = evolve(initial_state(), spec, 200);
    for (int t = 200; t <= 2000; ++t) {
      const double r = entanglement_entropy(reduced_density(s)) / entropy_asymptote(t);
      ASSERT_GE(r, 0.7) << "p=" << p << " t=" << t;
      ASSERT_LE(r, 1.3) << "p=" << p << " t=" << t;
      ratios.push_back(r);
      s = step(s, spec);
    }
  }
  const double a = ratio_half[800];
  const double b = ratio_biased[800];
  EXPECT_LT(std::abs(a - b) / a, 0.05);
}
