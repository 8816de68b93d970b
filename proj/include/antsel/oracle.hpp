#ifndef ANTSEL_ORACLE_HPP
#define ANTSEL_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "antsel/complex_matrix.hpp"
#include "antsel/mimo.hpp"
#include "antsel/relay.hpp"
#include "antsel/subset.hpp"

namespace antsel {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

/// n choose k, saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0..n-1} in lexicographic order.
///
///   for (SubsetEnumeration e(n, k); !e.done(); e.advance()) use(e.current());
///
/// `seek` jumps to a given lexicographic rank so the range can be split into
/// contiguous chunks.
class SubsetEnumeration {
 public:
  SubsetEnumeration(std::size_t universe_size, std::size_t cardinality);

  std::size_t universe_size() const { return n_; }
  std::size_t cardinality() const { return k_; }
  std::uint64_t count() const { return binomial(n_, k_); }

  bool done() const { return done_; }
  std::span<const std::size_t> current() const { return current_; }
  void advance();
  void seek(std::uint64_t rank);

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> current_;
  bool done_ = false;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteForceResult {
  AntennaSubset subset;
  double value = 0.0;
};

/// Exhaustive search over all L-subsets of receive antennas. Ties go to the
/// lexicographically smallest subset. Refuses with BudgetExceeded when
/// C(Nr, L) > budget.
BruteForceResult brute_force_select_mimo(const ComplexMatrix& h, std::size_t num_select,
                                         const TransmitConfig& cfg,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

/// Exhaustive search over all L-subsets of relay antennas by closed-form SNR.
BruteForceResult brute_force_select_relay(const RelayLinkSet& links, std::size_t num_select,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Objective-agnostic set function over {0..universe-1}. The argument is
/// sorted ascending. `modular` declares that marginal gains should not depend
/// on the base set, which check_submodular then verifies as an equality.
struct SetFunctionHandle {
  std::string name;
  std::function<double(std::span<const std::size_t>)> eval;
  bool modular = false;
};

SetFunctionHandle mimo_capacity_function(ComplexMatrix h, TransmitConfig cfg);
/// Entropy of the Gaussian vector whose covariance is I + (P/Nt) H H^H,
/// restricted to the chosen receive coordinates.
SetFunctionHandle gaussian_entropy_function(ComplexMatrix h, TransmitConfig cfg);
SetFunctionHandle relay_snr_function(const RelayLinkSet& links);
/// Capacity over transmit-antenna subsets with equal power split.
SetFunctionHandle transmit_capacity_function(ComplexMatrix h, double power);
/// f(S) = max_{i in S} values_i (0 on the empty set). Submodular, not modular.
SetFunctionHandle max_function(std::vector<double> values);

inline constexpr double kMonotoneTolerance = 1e-10;
inline constexpr double kSubmodularTolerance = 1e-9;
inline constexpr double kModularTolerance = 1e-12;
/// Universes up to this size are checked exhaustively instead of sampled.
inline constexpr std::size_t kExhaustiveUniverse = 8;

struct MonotoneWitness {
  std::vector<std::size_t> base;
  std::size_t added = 0;
  double margin = 0.0;
};

struct MonotoneReport {
  bool pass = true;
  bool exhaustive = false;
  std::size_t checks = 0;
  double min_margin = 0.0;
  std::optional<MonotoneWitness> witness;  // worst violation, if any
};

/// Checks f(S + a) - f(S) >= -1e-10 on sampled (or, for small universes, all)
/// pairs S, a not in S.
MonotoneReport check_monotone(const SetFunctionHandle& f, std::size_t universe,
                              std::size_t trials, std::uint64_t seed);

struct SubmodularWitness {
  std::vector<std::size_t> small;
  std::vector<std::size_t> large;
  std::size_t added = 0;
  double margin = 0.0;
};

struct SubmodularReport {
  bool pass = true;
  bool inequality_pass = true;
  bool equality_checked = false;
  bool equality_pass = true;
  bool exhaustive = false;
  std::size_t checks = 0;
  /// min over triples of [f(S+a) - f(S)] - [f(T+a) - f(T)]
  double min_margin = 0.0;
  /// max |[f(S+a) - f(S)] - [f(T+a) - f(T)]|
  double max_equality_drift = 0.0;
  std::optional<SubmodularWitness> witness;
};

/// Checks diminishing returns on sampled (or all) triples S <= T, a not in T.
/// For handles flagged modular, also requires equality within 1e-12.
SubmodularReport check_submodular(const SetFunctionHandle& f, std::size_t universe,
                                  std::size_t trials, std::uint64_t seed);

}  // namespace antsel

#endif  // ANTSEL_ORACLE_HPP
