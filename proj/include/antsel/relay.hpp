#ifndef ANTSEL_RELAY_HPP
#define ANTSEL_RELAY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "antsel/complex_matrix.hpp"
#include "antsel/hermitian.hpp"
#include "antsel/subset.hpp"

namespace antsel {

/// Amplify-and-forward relay antennas between a single-antenna source and a
/// single-antenna destination. No direct source-destination path.
class RelayLinkSet {
 public:
  /// f: source -> relay, g: relay -> destination.
  RelayLinkSet(ComplexVector f, ComplexVector g);

  std::size_t size() const { return f_.size(); }
  std::span<const Complex> f() const { return f_; }
  std::span<const Complex> g() const { return g_; }

  /// Amplification normalizer sqrt(|f_i|^2 + 1).
  double gamma(std::size_t i) const;

 private:
  ComplexVector f_;
  ComplexVector g_;
};

/// SNR(w) = |w^H Delta|^2 / (w^H B w) restricted to a subset, with
/// Delta_i = g_i f_i / gamma_i and B = I + diag(|g_i|^2 / gamma_i^2).
struct RelaySnrDecomposition {
  ComplexVector delta;
  std::vector<double> noise_diag;
  HermitianPD b;
};

RelaySnrDecomposition decompose_relay_snr(const RelayLinkSet& links, const AntennaSubset& subset);

/// Destination SNR for weights `w` over the decomposition's subset.
double relay_rayleigh_quotient(const RelaySnrDecomposition& d, std::span<const Complex> w);

/// Per-antenna contributions q_i = |g_i|^2 |f_i|^2 / (|f_i|^2 + |g_i|^2 + 1).
class RelayGainTable {
 public:
  explicit RelayGainTable(const RelayLinkSet& links);

  std::size_t size() const { return gains_.size(); }
  double operator[](std::size_t i) const { return gains_[i]; }
  std::span<const double> gains() const { return gains_; }

 private:
  std::vector<double> gains_;
};

/// max_w SNR over the subset, as the sum of q_i in ascending index order.
double relay_snr_closed_form(const RelayGainTable& table, const AntennaSubset& subset);
double relay_snr_closed_form(const RelayLinkSet& links, const AntennaSubset& subset);

struct RelayBeamforming {
  ComplexVector weights;  // unit norm unless degenerate
  double achieved_snr = 0.0;
  bool degenerate = false;
};

/// w = B^{-1} Delta scaled to unit norm, with the SNR it achieves evaluated
/// numerically from the Rayleigh quotient. A subset whose links are all dead
/// returns zero weights, SNR 0, and the degenerate flag.
RelayBeamforming relay_optimal_weights(const RelayLinkSet& links, const AntennaSubset& subset);

/// Relay selection as top-L of the gain table (lowest index on ties).
SelectionResult greedy_select_relay(const RelayLinkSet& links, std::size_t num_select);

/// Relay selection that re-evaluates max_w SNR(T + i) for every candidate at
/// every step. Matches greedy_select_relay on tie-free instances.
SelectionResult greedy_select_relay_stepwise(const RelayLinkSet& links, std::size_t num_select);

/// ln(1 + snr); throws std::domain_error for negative snr.
double relay_capacity(double snr);

}  // namespace antsel

#endif  // ANTSEL_RELAY_HPP
