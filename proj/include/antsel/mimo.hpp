#ifndef ANTSEL_MIMO_HPP
#define ANTSEL_MIMO_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "antsel/complex_matrix.hpp"
#include "antsel/hermitian.hpp"
#include "antsel/subset.hpp"

namespace antsel {

/// Average transmit power P (linear) split equally over Nt antennas.
class TransmitConfig {
 public:
  TransmitConfig(double power, std::size_t num_tx);

  double power() const { return power_; }
  std::size_t num_tx() const { return num_tx_; }
  /// P / Nt
  double per_antenna_power() const { return power_ / static_cast<double>(num_tx_); }

 private:
  double power_;
  std::size_t num_tx_;
};

/// Marginal gains below this are recorded as exactly zero in traces.
inline constexpr double kGainClampThreshold = 1e-12;

/// ln det(I + (P/Nt) H_S H_S^H) for the receive rows S. Evaluated on the
/// smaller of |S| and Nt through det(I + AB) = det(I + BA).
double mimo_capacity(const ComplexMatrix& h, const AntennaSubset& subset,
                     const TransmitConfig& cfg);

class StaleGreedyState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Factorization of M_S = I_Nt + (P/Nt) H_S^H H_S for the current subset S.
/// Single owner; updated in place as antennas are accepted.
class GreedyState {
 public:
  GreedyState(const ComplexMatrix& h, const TransmitConfig& cfg);

  const AntennaSubset& subset() const { return subset_; }
  const CholeskyFactor& factor() const { return factor_; }

  /// Adds `antenna` and applies the rank-one update for its row.
  void accept(const ComplexMatrix& h, std::size_t antenna, const TransmitConfig& cfg);

 private:
  AntennaSubset subset_;
  CholeskyFactor factor_;
};

/// ln(1 + (P/Nt) h_a M_S^{-1} h_a^H), the capacity increase from adding
/// receive antenna `candidate` to `subset`. `state` must describe `subset`.
double marginal_gain(const ComplexMatrix& h, const AntennaSubset& subset, std::size_t candidate,
                     const TransmitConfig& cfg, const GreedyState& state);

/// Greedy receive-antenna selection: at each step add the antenna with the
/// largest capacity increase (lowest index on ties) until L are chosen.
SelectionResult greedy_select_mimo(const ComplexMatrix& h, std::size_t num_select,
                                   const TransmitConfig& cfg);

/// Capacity when only the transmit antennas in `tx_subset` are active and the
/// total power is split equally over them. Zero for the empty set.
double transmit_subset_capacity(const ComplexMatrix& h, const AntennaSubset& tx_subset,
                                double power);

struct TransmitComparison {
  Complex h1;
  Complex h2;
  double power = 0.0;
  double single_antenna = 0.0;  // first antenna alone, full power
  double both_antennas = 0.0;   // power split over both
};

struct CounterexampleReport {
  std::vector<TransmitComparison> cases;
  bool adding_antenna_can_hurt = false;
  bool adding_antenna_can_help = false;
};

/// Two-transmit, one-receive instances showing that transmit-side selection
/// is not monotone. Capacities are evaluated at call time.
CounterexampleReport transmit_counterexample();

}  // namespace antsel

#endif  // ANTSEL_MIMO_HPP
