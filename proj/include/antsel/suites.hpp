#ifndef ANTSEL_SUITES_HPP
#define ANTSEL_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace antsel {

struct SuiteOptions {
  std::size_t instances = 200;
  std::uint64_t seed = 1;
  std::size_t max_rx = 12;  // random MIMO instances draw Nr from [2, max_rx]
  std::size_t max_tx = 6;
  std::size_t checks_per_instance = 20;
};

struct SuiteOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Property suites behind `antsel check`: monotonicity and diminishing
/// returns of MIMO capacity, relay modularity, greedy-vs-exhaustive bounds,
/// and the transmit-side non-monotonicity witness.
std::vector<SuiteOutcome> run_property_suites(const SuiteOptions& options);

}  // namespace antsel

#endif  // ANTSEL_SUITES_HPP
