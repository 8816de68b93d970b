#include "antsel/relay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "antsel/mimo.hpp"

namespace antsel {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_selection_size(std::size_t num_select, std::size_t universe) {
  if (num_select < 1 || num_select > universe)
    throw std::invalid_argument("L = " + std::to_string(num_select) + " outside [1, " +
                                std::to_string(universe) + "]");
}

void require_subset_of(const RelayLinkSet& links, const AntennaSubset& subset) {
  if (subset.universe_size() != links.size())
    throw std::invalid_argument("subset universe " + std::to_string(subset.universe_size()) +
                                " does not match N = " + std::to_string(links.size()));
}

}  // namespace

RelayLinkSet::RelayLinkSet(ComplexVector f, ComplexVector g) : f_(std::move(f)), g_(std::move(g)) {
  if (f_.size() != g_.size())
    throw std::invalid_argument("RelayLinkSet: f and g lengths differ");
  if (!std::all_of(f_.begin(), f_.end(), finite) || !std::all_of(g_.begin(), g_.end(), finite))
    throw std::invalid_argument("RelayLinkSet: non-finite coefficient");
}

double RelayLinkSet::gamma(std::size_t i) const { return std::sqrt(std::norm(f_.at(i)) + 1.0); }

RelaySnrDecomposition decompose_relay_snr(const RelayLinkSet& links, const AntennaSubset& subset) {
  require_subset_of(links, subset);
  const std::size_t n = subset.size();
  ComplexVector delta(n);
  std::vector<double> noise(n);
  std::vector<double> b_diag(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = subset.indices()[k];
    const double gamma = links.gamma(i);
    delta[k] = links.g()[i] * links.f()[i] / gamma;
    noise[k] = std::norm(links.g()[i]) / (gamma * gamma);
    b_diag[k] = 1.0 + noise[k];
  }
  return {std::move(delta), std::move(noise), HermitianPD(ComplexMatrix::diagonal(b_diag))};
}

double relay_rayleigh_quotient(const RelaySnrDecomposition& d, std::span<const Complex> w) {
  const double num = std::norm(dot(w, d.delta));
  const double den = dot(w, d.b.matrix() * w).real();
  if (!(den > 0.0)) throw std::invalid_argument("relay_rayleigh_quotient: zero weight vector");
  return num / den;
}

RelayGainTable::RelayGainTable(const RelayLinkSet& links) : gains_(links.size()) {
  for (std::size_t i = 0; i < links.size(); ++i) {
    const double f2 = std::norm(links.f()[i]);
    const double g2 = std::norm(links.g()[i]);
    gains_[i] = g2 * f2 / (f2 + g2 + 1.0);
  }
}

double relay_snr_closed_form(const RelayGainTable& table, const AntennaSubset& subset) {
  if (subset.universe_size() != table.size())
    throw std::invalid_argument("subset universe does not match the gain table");
  double acc = 0.0;
  for (std::size_t i : subset.indices()) acc += table[i];
  return acc;
}

double relay_snr_closed_form(const RelayLinkSet& links, const AntennaSubset& subset) {
  require_subset_of(links, subset);
  return relay_snr_closed_form(RelayGainTable(links), subset);
}

RelayBeamforming relay_optimal_weights(const RelayLinkSet& links, const AntennaSubset& subset) {
  if (subset.empty()) throw std::invalid_argument("relay_optimal_weights: empty subset");
  const RelaySnrDecomposition d = decompose_relay_snr(links, subset);
  RayleighMax best = rank1_rayleigh_max(d.delta, d.b);
  RelayBeamforming out;
  if (best.degenerate) {
    out.weights = std::move(best.argmax);
    out.degenerate = true;
    return out;
  }
  const double norm = std::sqrt(squared_norm(best.argmax));
  for (auto& z : best.argmax) z /= norm;
  out.weights = std::move(best.argmax);
  out.achieved_snr = relay_rayleigh_quotient(d, out.weights);
  return out;
}

SelectionResult greedy_select_relay(const RelayLinkSet& links, std::size_t num_select) {
  require_selection_size(num_select, links.size());
  const RelayGainTable table(links);
  std::vector<std::size_t> order(links.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return table[a] > table[b]; });

  SelectionResult result{AntennaSubset(links.size()), {}};
  for (std::size_t step = 0; step < num_select; ++step) {
    const std::size_t a = order[step];
    result.subset.insert(a);
    result.trace.chosen.push_back({step, a, table[a]});
  }
  result.trace.final_value = relay_snr_closed_form(table, result.subset);
  return result;
}

SelectionResult greedy_select_relay_stepwise(const RelayLinkSet& links, std::size_t num_select) {
  require_selection_size(num_select, links.size());
  const auto max_snr = [&](const AntennaSubset& s) {
    if (s.empty()) return 0.0;
    const RelaySnrDecomposition d = decompose_relay_snr(links, s);
    return rank1_rayleigh_max(d.delta, d.b).value;
  };

  SelectionResult result{AntennaSubset(links.size()), {}};
  double current = 0.0;
  for (std::size_t step = 0; step < num_select; ++step) {
    std::size_t best = links.size();
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < links.size(); ++a) {
      if (result.subset.contains(a)) continue;
      const double v = max_snr(result.subset.with(a));
      if (v > best_value) {
        best_value = v;
        best = a;
      }
    }
    result.subset.insert(best);
    const double gain = best_value - current;
    result.trace.chosen.push_back({step, best, std::abs(gain) < kGainClampThreshold ? 0.0 : gain});
    current = best_value;
  }
  result.trace.final_value = current;
  return result;
}

double relay_capacity(double snr) {
  if (!(snr >= 0.0)) throw std::domain_error("relay_capacity: SNR must be non-negative");
  return std::log1p(snr);
}

}  // namespace antsel
