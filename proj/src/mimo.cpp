#include "antsel/mimo.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace antsel {

TransmitConfig::TransmitConfig(double power, std::size_t num_tx) : power_(power), num_tx_(num_tx) {
  if (!(power > 0.0) || !std::isfinite(power))
    throw std::invalid_argument("TransmitConfig: power must be positive and finite");
  if (num_tx == 0) throw std::invalid_argument("TransmitConfig: need at least one transmit antenna");
}

namespace {

void require_channel(const ComplexMatrix& h, const TransmitConfig& cfg) {
  if (h.cols() != cfg.num_tx())
    throw std::invalid_argument("channel has " + std::to_string(h.cols()) +
                                " columns but the transmit config has Nt = " +
                                std::to_string(cfg.num_tx()));
  if (!h.all_finite()) throw std::invalid_argument("channel matrix has non-finite entries");
}

void require_subset_of(const ComplexMatrix& h, const AntennaSubset& subset) {
  if (subset.universe_size() != h.rows())
    throw std::invalid_argument("subset universe " + std::to_string(subset.universe_size()) +
                                " does not match Nr = " + std::to_string(h.rows()));
}

ComplexVector conj_row(const ComplexMatrix& h, std::size_t r) {
  ComplexVector x(h.cols());
  for (std::size_t j = 0; j < h.cols(); ++j) x[j] = std::conj(h(r, j));
  return x;
}

double logdet_identity_plus(const ComplexMatrix& a, double scale) {
  if (a.rows() <= a.cols()) return HermitianPD(identity_plus_outer(a, scale)).factor().logdet();
  return HermitianPD(identity_plus_gram(a, scale)).factor().logdet();
}

}  // namespace

double mimo_capacity(const ComplexMatrix& h, const AntennaSubset& subset,
                     const TransmitConfig& cfg) {
  require_channel(h, cfg);
  require_subset_of(h, subset);
  if (subset.empty()) return 0.0;
  return logdet_identity_plus(h.select_rows(subset.indices()), cfg.per_antenna_power());
}

GreedyState::GreedyState(const ComplexMatrix& h, const TransmitConfig& cfg)
    : subset_(h.rows()),
      factor_(CholeskyFactor::factor(ComplexMatrix::identity(cfg.num_tx()))) {
  require_channel(h, cfg);
}

void GreedyState::accept(const ComplexMatrix& h, std::size_t antenna, const TransmitConfig& cfg) {
  subset_.insert(antenna);
  ComplexVector x = conj_row(h, antenna);
  const double s = std::sqrt(cfg.per_antenna_power());
  for (auto& z : x) z *= s;
  factor_.rank_one_update(x);
}

double marginal_gain(const ComplexMatrix& h, const AntennaSubset& subset, std::size_t candidate,
                     const TransmitConfig& cfg, const GreedyState& state) {
  require_subset_of(h, subset);
  if (candidate >= h.rows())
    throw std::out_of_range("candidate antenna " + std::to_string(candidate) + " out of range");
  if (subset.contains(candidate))
    throw std::invalid_argument("candidate antenna " + std::to_string(candidate) +
                                " is already selected");
  if (!(state.subset() == subset))
    throw StaleGreedyState("greedy state does not describe the given subset");
  if (state.factor().dim() != cfg.num_tx())
    throw StaleGreedyState("greedy state dimension does not match Nt");
  const double q = state.factor().inverse_quadratic_form(conj_row(h, candidate));
  return std::log1p(cfg.per_antenna_power() * q);
}

SelectionResult greedy_select_mimo(const ComplexMatrix& h, std::size_t num_select,
                                   const TransmitConfig& cfg) {
  require_channel(h, cfg);
  if (num_select < 1 || num_select > h.rows())
    throw std::invalid_argument("L = " + std::to_string(num_select) + " outside [1, " +
                                std::to_string(h.rows()) + "]");
  GreedyState state(h, cfg);
  SelectionResult result{AntennaSubset(h.rows()), {}};
  for (std::size_t step = 0; step < num_select; ++step) {
    std::size_t best = h.rows();
    double best_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < h.rows(); ++a) {
      if (state.subset().contains(a)) continue;
      const double g = marginal_gain(h, state.subset(), a, cfg, state);
      if (g > best_gain) {
        best_gain = g;
        best = a;
      }
    }
    state.accept(h, best, cfg);
    const double recorded = best_gain < kGainClampThreshold ? 0.0 : best_gain;
    result.trace.chosen.push_back({step, best, recorded});
    result.trace.final_value += recorded;
  }
  result.subset = state.subset();
  return result;
}

double transmit_subset_capacity(const ComplexMatrix& h, const AntennaSubset& tx_subset,
                                double power) {
  if (tx_subset.universe_size() != h.cols())
    throw std::invalid_argument("transmit subset universe does not match Nt");
  if (tx_subset.empty()) return 0.0;
  const ComplexMatrix active = h.select_cols(tx_subset.indices());
  return logdet_identity_plus(active.adjoint(),
                              power / static_cast<double>(tx_subset.size()));
}

CounterexampleReport transmit_counterexample() {
  struct Instance {
    Complex h1, h2;
    double power;
  };
  const Instance instances[] = {
      {1.0, 0.0, 1.0},  // second antenna is dead: splitting power hurts
      {1.0, 1.0, 2.0},  // symmetric: equal
      {0.1, 2.0, 1.0},  // strong second antenna: splitting helps
  };
  CounterexampleReport report;
  for (const auto& in : instances) {
    const ComplexMatrix h{{in.h1, in.h2}};
    TransmitComparison c{in.h1, in.h2, in.power,
                         transmit_subset_capacity(h, AntennaSubset(2, {0}), in.power),
                         transmit_subset_capacity(h, AntennaSubset::full(2), in.power)};
    report.adding_antenna_can_hurt |= c.both_antennas < c.single_antenna - 1e-12;
    report.adding_antenna_can_help |= c.both_antennas > c.single_antenna + 1e-12;
    report.cases.push_back(c);
  }
  return report;
}

}  // namespace antsel
