#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "antsel/oracle.hpp"
#include "antsel/relay.hpp"
#include "oracles.hpp"

namespace {

using namespace antsel;
using antsel::testing::power_iteration_lambda_max;
using antsel::testing::random_complex_vector;

RelayLinkSet random_links(std::size_t n, std::mt19937_64& rng) {
  ComplexVector f = random_complex_vector(n, rng);
  ComplexVector g = random_complex_vector(n, rng);
  return RelayLinkSet(std::move(f), std::move(g));
}

/// Links whose gain table is exactly (0.5, 0.1, 0.9): real f = g = x with
/// x^4 / (2 x^2 + 1) = q, i.e. x^2 = q + sqrt(q^2 + q).
RelayLinkSet links_with_gains(std::initializer_list<double> gains) {
  ComplexVector f;
  for (double q : gains) f.emplace_back(std::sqrt(q + std::sqrt(q * q + q)));
  return RelayLinkSet(f, f);
}

TEST(RelayLinkSet, Validates) {
  EXPECT_THROW(RelayLinkSet({1.0}, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(RelayLinkSet({std::nan("")}, {1.0}), std::invalid_argument);
  const RelayLinkSet links({Complex(3.0, 4.0)}, {1.0});
  EXPECT_NEAR(std::sqrt(26.0), links.gamma(0), 1e-15);
}

TEST(RelayGainTable, ZeroIffDeadLink) {
  const RelayLinkSet links({0.0, 1.0, 1.0}, {1.0, 0.0, Complex(0, 1)});
  const RelayGainTable table(links);
  EXPECT_EQ(0.0, table[0]);
  EXPECT_EQ(0.0, table[1]);
  EXPECT_GT(table[2], 0.0);
}

TEST(RelayGainTable, FixedValuesAgainstNumpy) {
  const RelayLinkSet links({1.0, Complex(0.5, 0.5), Complex(0, -1.2), 0.3, Complex(2, -1)},
                           {1.0, Complex(0, 1), Complex(0.8, -0.1), 0.0, Complex(-0.5, 0.5)});
  const RelayGainTable t(links);
  const double expected[] = {0.3333333333333333, 0.20000000000000004, 0.30291262135922326, 0.0,
                             0.3846153846153847};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(expected[i], t[i], 1e-15);
}

TEST(RelaySnrClosedForm, Basics) {
  const RelayLinkSet one({1.0}, {1.0});
  EXPECT_NEAR(1.0 / 3.0, relay_snr_closed_form(one, AntennaSubset::full(1)), 1e-16);
  EXPECT_EQ(0.0, relay_snr_closed_form(one, AntennaSubset(1)));

  std::mt19937_64 rng(1);
  const RelayLinkSet links = random_links(6, rng);
  const double pair = relay_snr_closed_form(links, AntennaSubset(6, {1, 4}));
  EXPECT_DOUBLE_EQ(relay_snr_closed_form(links, AntennaSubset(6, {1})) +
                       relay_snr_closed_form(links, AntennaSubset(6, {4})),
                   pair);
  EXPECT_THROW(relay_snr_closed_form(links, AntennaSubset(7, {6})), std::invalid_argument);
}

TEST(RelayOptimalWeights, SingleRelay) {
  const RelayLinkSet one({1.0}, {1.0});
  const RelaySnrDecomposition d = decompose_relay_snr(one, AntennaSubset::full(1));
  EXPECT_NEAR(1.0 / std::sqrt(2.0), d.delta[0].real(), 1e-15);
  EXPECT_NEAR(1.5, d.b.matrix()(0, 0).real(), 1e-15);

  const RelayBeamforming bf = relay_optimal_weights(one, AntennaSubset::full(1));
  ASSERT_EQ(1u, bf.weights.size());
  EXPECT_NEAR(1.0, bf.weights[0].real(), 1e-15);
  EXPECT_NEAR(1.0 / 3.0, bf.achieved_snr, 1e-15);
  EXPECT_FALSE(bf.degenerate);
}

TEST(RelayOptimalWeights, TwoIdenticalRelays) {
  const RelayLinkSet two({1.0, 1.0}, {1.0, 1.0});
  const RelayBeamforming bf = relay_optimal_weights(two, AntennaSubset::full(2));
  EXPECT_NEAR(2.0 / 3.0, bf.achieved_snr, 1e-15);
  const RelaySnrDecomposition d = decompose_relay_snr(two, AntennaSubset::full(2));
  EXPECT_NEAR(2.0 / 3.0, power_iteration_lambda_max(d.delta, d.b.matrix()), 1e-12);

  // Dense grid over w = (cos t, e^{i p} sin t) never beats the optimum.
  double grid_best = 0.0;
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; j < 64; ++j) {
      const double t = std::numbers::pi / 2 * i / 200.0;
      const double p = 2 * std::numbers::pi * j / 64.0;
      const ComplexVector w{std::cos(t), std::polar(std::sin(t), p)};
      grid_best = std::max(grid_best, relay_rayleigh_quotient(d, w));
    }
  EXPECT_LE(grid_best, 2.0 / 3.0 + 1e-12);
  EXPECT_NEAR(2.0 / 3.0, grid_best, 1e-6);
}

TEST(RelayOptimalWeights, RandomSubsetsMatchClosedFormAndPowerIteration) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const RelayLinkSet links = random_links(8, rng);
    const AntennaSubset subset(8, {0, 2, 3, 5, 7});
    const RelayBeamforming bf = relay_optimal_weights(links, subset);
    const double closed = relay_snr_closed_form(links, subset);
    EXPECT_NEAR(closed, bf.achieved_snr, 1e-10 * closed);
    EXPECT_NEAR(1.0, squared_norm(bf.weights), 1e-10);
    const RelaySnrDecomposition d = decompose_relay_snr(links, subset);
    EXPECT_NEAR(closed, power_iteration_lambda_max(d.delta, d.b.matrix()), 1e-8);
  }
}

TEST(RelayOptimalWeights, DeadSubsetIsDegenerate) {
  const RelayLinkSet links({0.0, 1.0}, {1.0, 0.0});
  const RelayBeamforming bf = relay_optimal_weights(links, AntennaSubset::full(2));
  EXPECT_TRUE(bf.degenerate);
  EXPECT_EQ(0.0, bf.achieved_snr);
  EXPECT_THROW(relay_optimal_weights(links, AntennaSubset(2)), std::invalid_argument);
}

TEST(GreedySelectRelay, PicksLargestGains) {
  const RelayLinkSet links = links_with_gains({0.5, 0.1, 0.9});
  const RelayGainTable t(links);
  EXPECT_NEAR(0.5, t[0], 1e-14);
  EXPECT_NEAR(0.1, t[1], 1e-14);
  EXPECT_NEAR(0.9, t[2], 1e-14);

  const SelectionResult r = greedy_select_relay(links, 2);
  EXPECT_EQ((std::vector<std::size_t>{2, 0}), r.trace.order());
  EXPECT_EQ(AntennaSubset(3, {0, 2}), r.subset);
  EXPECT_NEAR(1.4, r.trace.final_value, 1e-14);

  const BruteForceResult best = brute_force_select_relay(links, 2);
  EXPECT_EQ(AntennaSubset(3, {0, 2}), best.subset);
  EXPECT_NEAR(1.4, best.value, 1e-14);
  EXPECT_EQ(AntennaSubset::full(3), greedy_select_relay(links, 3).subset);
}

TEST(GreedySelectRelay, TiesGoToLowestIndex) {
  const RelayLinkSet links({1.0, 2.0, 1.0, 2.0}, {1.0, 2.0, 1.0, 2.0});
  EXPECT_EQ((std::vector<std::size_t>{1, 3, 0}), greedy_select_relay(links, 3).trace.order());
}

TEST(GreedySelectRelay, RejectsBadL) {
  const RelayLinkSet links({1.0}, {1.0});
  EXPECT_THROW(greedy_select_relay(links, 0), std::invalid_argument);
  EXPECT_THROW(greedy_select_relay(links, 2), std::invalid_argument);
  EXPECT_THROW(greedy_select_relay_stepwise(links, 2), std::invalid_argument);
}

TEST(GreedySelectRelay, StepwiseMatchesTopL) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const RelayLinkSet links = random_links(10, rng);
    for (std::size_t l = 1; l <= 10; ++l) {
      const SelectionResult fast = greedy_select_relay(links, l);
      const SelectionResult literal = greedy_select_relay_stepwise(links, l);
      EXPECT_EQ(fast.trace.order(), literal.trace.order());
      EXPECT_NEAR(fast.trace.final_value, literal.trace.final_value, 1e-12);
      for (std::size_t i = 0; i < l; ++i)
        EXPECT_NEAR(fast.trace.chosen[i].gain, literal.trace.chosen[i].gain, 1e-12);
    }
  }
}

TEST(GreedySelectRelay, OptimalOnSixteen) {
  std::mt19937_64 rng(4);
  const RelayLinkSet links = random_links(16, rng);
  for (std::size_t l = 1; l <= 16; ++l) {
    if (binomial(16, l) > 12870) continue;
    EXPECT_NEAR(brute_force_select_relay(links, l).value,
                greedy_select_relay(links, l).trace.final_value, 1e-12);
  }
}

TEST(GreedySelectRelay, PhaseInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RelayLinkSet links = random_links(9, rng);
    ComplexVector g(links.g().begin(), links.g().end());
    const Complex phase = std::polar(1.0, 0.37 * (trial + 1));
    for (auto& z : g) z *= phase;
    const RelayLinkSet rotated(ComplexVector(links.f().begin(), links.f().end()), g);
    const RelayGainTable a(links), b(rotated);
    for (std::size_t i = 0; i < 9; ++i) EXPECT_NEAR(a[i], b[i], 1e-15);
    EXPECT_EQ(greedy_select_relay(links, 4).subset, greedy_select_relay(rotated, 4).subset);
  }
}

TEST(RelayCapacity, Values) {
  EXPECT_EQ(0.0, relay_capacity(0.0));
  EXPECT_NEAR(std::log(4.0 / 3.0), relay_capacity(1.0 / 3.0), 1e-15);
  EXPECT_NEAR(1.0, relay_capacity(std::numbers::e - 1.0), 1e-15);
  EXPECT_THROW(relay_capacity(-0.1), std::domain_error);
}

}  // namespace
