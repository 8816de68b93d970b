#ifndef ANTSEL_HARNESS_HPP
#define ANTSEL_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "antsel/complex_matrix.hpp"
#include "antsel/oracle.hpp"
#include "antsel/relay.hpp"

namespace antsel {

using Rng = std::mt19937_64;

/// Independent generator for trial `index` of a run seeded with `seed`.
/// Depends only on (seed, index), never on evaluation order.
Rng substream(std::uint64_t seed, std::uint64_t index);

/// I.i.d. circularly-symmetric complex Gaussian entries with unit variance.
ComplexMatrix sample_channel_mimo(std::size_t num_rx, std::size_t num_tx, Rng& rng);
RelayLinkSet sample_channel_relay(std::size_t num_relays, Rng& rng);

using MimoSampler = std::function<ComplexMatrix(std::size_t num_rx, std::size_t num_tx, Rng&)>;
using RelaySampler = std::function<RelayLinkSet(std::size_t num_relays, Rng&)>;

enum class Mode { kMimo, kRelay };

std::string to_string(Mode mode);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Mode mode = Mode::kMimo;
  std::size_t universe = 16;  // Nr for mimo, N for relay
  std::size_t num_tx = 4;     // mimo only
  std::vector<std::size_t> l_values;
  double power = 1.0;  // mimo only; the relay model uses unit powers
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool brute_force = false;
  std::optional<double> outage_rate;
  std::string output_path;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
  bool bits = false;  // CSV output in bits instead of nats
  MimoSampler mimo_sampler;    // defaults to Rayleigh
  RelaySampler relay_sampler;  // defaults to Rayleigh

  /// Throws ConfigError.
  void validate() const;
};

/// "a..b" inclusive range, "a,b,c" list, or a single count.
std::vector<std::size_t> parse_count_range(const std::string& text);

struct ResultRow {
  std::size_t num_select = 0;
  std::size_t trials = 0;
  double mean_greedy = 0.0;
  double stderr_greedy = 0.0;
  std::optional<double> mean_optimal;
  std::optional<double> stderr_optimal;
  std::optional<double> ratio;  // mean_greedy / mean_optimal
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  std::vector<std::string> warnings;
};

/// Runs `trials` independent channel draws. Every L in the range is evaluated
/// on the same draw, and greedy and brute force see the same channel.
/// Capacities are in nats. Writes CSV to cfg.output_path when set.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// CSV text: optional '#' warning lines, then the header
/// mode,L,trials,mean_greedy,stderr_greedy,mean_optimal,stderr_optimal,ratio,seed
std::string format_csv(const ExperimentConfig& cfg, const ExperimentResult& result);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

struct OutageEstimate {
  std::size_t num_select = 0;
  std::size_t trials = 0;
  std::size_t outages = 0;
  double probability = 0.0;
  double std_error = 0.0;  // binomial sqrt(p(1-p)/n)
};

/// Empirical P(C <= rate) for the greedy-selected subset, one estimate per L.
OutageEstimate estimate_outage_for(const ExperimentConfig& cfg, double rate, std::size_t l);
std::vector<OutageEstimate> estimate_outage(const ExperimentConfig& cfg, double rate);

/// Pairwise summation in index order.
double pairwise_sum(std::span<const double> values);

}  // namespace antsel

#endif  // ANTSEL_HARNESS_HPP
