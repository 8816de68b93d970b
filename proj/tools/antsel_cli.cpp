// antsel: greedy antenna selection experiments.
//
//   antsel mimo  --nr 16 --nt 4 --l 1..16 --trials 500 --brute-force --out mimo.csv
//   antsel relay --n 16 --l 1..16 --trials 500 --brute-force
//   antsel outage --mode mimo --nr 8 --nt 2 --l 2 --rate 1.0 --trials 100000
//   antsel counterexample
//   antsel check --trials 200
//
// Exit codes: 0 success, 1 I/O failure, 2 configuration error, 3 property
// check failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "antsel/harness.hpp"
#include "antsel/mimo.hpp"
#include "antsel/oracle.hpp"
#include "antsel/suites.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCheckFailed = 3;

struct Options {
  antsel::ExperimentConfig cfg;
  std::string l_range;
  std::string mode = "mimo";
  double rate = 0.0;
};

void add_experiment_flags(CLI::App* sub, Options& o, bool mimo_flags) {
  sub->add_option("--nr,--n", o.cfg.universe, "Receive (mimo) or relay antenna count");
  if (mimo_flags) {
    sub->add_option("--nt", o.cfg.num_tx, "Transmit antenna count (mimo)");
    sub->add_option("--power", o.cfg.power, "Average transmit power P, linear (mimo)");
  }
  sub->add_option("--l", o.l_range, "Selection sizes: a..b, a,b,c or a single count");
  sub->add_option("--trials", o.cfg.trials, "Monte Carlo trials");
  sub->add_option("--seed", o.cfg.seed, "RNG seed");
  sub->add_option("--threads", o.cfg.threads, "Worker threads");
  sub->add_flag("--bits", o.cfg.bits, "Report capacities in bits instead of nats");
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int run_sweep(Options& o, antsel::Mode mode) {
  o.cfg.mode = mode;
  o.cfg.l_values = o.l_range.empty() ? antsel::parse_count_range("1.." + std::to_string(o.cfg.universe))
                                     : antsel::parse_count_range(o.l_range);
  const auto result = antsel::run_experiment(o.cfg);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  if (o.cfg.output_path.empty()) std::cout << antsel::format_csv(o.cfg, result);
  return 0;
}

int run_outage(Options& o) {
  if (o.mode == "mimo") {
    o.cfg.mode = antsel::Mode::kMimo;
  } else if (o.mode == "relay") {
    o.cfg.mode = antsel::Mode::kRelay;
  } else {
    throw antsel::ConfigError("--mode must be mimo or relay");
  }
  o.cfg.l_values = o.l_range.empty() ? antsel::parse_count_range(std::to_string(o.cfg.universe))
                                     : antsel::parse_count_range(o.l_range);
  const double rate_nats = o.cfg.bits ? o.rate * std::numbers::ln2 : o.rate;
  o.cfg.outage_rate = rate_nats;
  std::string out = "mode,L,trials,rate,outages,probability,stderr,seed\n";
  for (const auto& e : antsel::estimate_outage(o.cfg, rate_nats)) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.15g,%zu,%.15g,%.15g,%llu\n",
                  antsel::to_string(o.cfg.mode).c_str(), e.num_select, e.trials, o.rate, e.outages,
                  e.probability, e.std_error, static_cast<unsigned long long>(o.cfg.seed));
    out += buf;
  }
  if (o.cfg.output_path.empty())
    std::cout << out;
  else
    antsel::write_file_atomic(o.cfg.output_path, out);
  return 0;
}

int run_counterexample(bool bits) {
  const double unit = bits ? 1.0 / std::numbers::ln2 : 1.0;
  const std::string units = bits ? "bits" : "nats";
  const auto report = antsel::transmit_counterexample();
  std::cout << "transmit selection, Nt=2, Nr=1 (" << units << ")\n";
  for (const auto& c : report.cases) {
    const char* rel = std::abs(c.both_antennas - c.single_antenna) <= 1e-12 ? "="
                      : c.both_antennas < c.single_antenna                  ? "<"
                                                                            : ">";
    std::cout << "h=(" << c.h1.real() << ", " << c.h2.real() << ") P=" << c.power
              << " C1=" << fixed(c.single_antenna * unit) << " C2=" << fixed(c.both_antennas * unit)
              << "  C2 " << rel << " C1\n";
  }
  const antsel::ComplexMatrix h{{1.0, 0.0}};
  const auto mono = antsel::check_monotone(antsel::transmit_capacity_function(h, 1.0), 2, 0, 0);
  std::cout << "transmit-side monotonicity check: " << (mono.pass ? "PASS" : "FAIL");
  if (mono.witness) {
    std::cout << " (witness: adding antenna " << mono.witness->added << " to {";
    for (std::size_t i = 0; i < mono.witness->base.size(); ++i)
      std::cout << (i ? "," : "") << mono.witness->base[i];
    std::cout << "} changes capacity by " << fixed(mono.witness->margin * unit) << ")";
  }
  std::cout << '\n';
  return 0;
}

int run_check(const antsel::SuiteOptions& options) {
  bool all = true;
  for (const auto& s : antsel::run_property_suites(options)) {
    std::cout << (s.pass ? "PASS " : "FAIL ") << s.name << ": " << s.detail << '\n';
    all &= s.pass;
  }
  return all ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy receive and relay antenna selection"};
  app.require_subcommand(1);

  Options mimo;
  auto* mimo_cmd = app.add_subcommand("mimo", "Greedy vs exhaustive receive selection sweep");
  add_experiment_flags(mimo_cmd, mimo, true);
  mimo_cmd->add_flag("--brute-force", mimo.cfg.brute_force, "Also run exhaustive search");
  mimo_cmd->add_option("--budget", mimo.cfg.budget, "Max subsets per exhaustive search");
  mimo_cmd->add_option("--out", mimo.cfg.output_path, "CSV output path (stdout if omitted)");

  Options relay;
  relay.cfg.mode = antsel::Mode::kRelay;
  auto* relay_cmd = app.add_subcommand("relay", "Greedy vs exhaustive relay selection sweep");
  add_experiment_flags(relay_cmd, relay, false);
  relay_cmd->add_flag("--brute-force", relay.cfg.brute_force, "Also run exhaustive search");
  relay_cmd->add_option("--budget", relay.cfg.budget, "Max subsets per exhaustive search");
  relay_cmd->add_option("--out", relay.cfg.output_path, "CSV output path (stdout if omitted)");

  Options outage;
  outage.cfg.universe = 8;
  outage.cfg.num_tx = 2;
  auto* outage_cmd = app.add_subcommand("outage", "Outage probability of the greedy subset");
  add_experiment_flags(outage_cmd, outage, true);
  outage_cmd->add_option("--mode", outage.mode, "mimo or relay");
  outage_cmd->add_option("--rate", outage.rate, "Target rate R (nats, or bits with --bits)")
      ->required();
  outage_cmd->add_option("--out", outage.cfg.output_path, "CSV output path (stdout if omitted)");

  bool counter_bits = false;
  auto* counter_cmd =
      app.add_subcommand("counterexample", "Transmit-side selection is not monotone");
  counter_cmd->add_flag("--bits", counter_bits, "Report capacities in bits");

  antsel::SuiteOptions suite;
  auto* check_cmd = app.add_subcommand("check", "Run the property suites");
  check_cmd->add_option("--trials", suite.instances, "Random instances per suite");
  check_cmd->add_option("--seed", suite.seed, "RNG seed");
  check_cmd->add_option("--nr", suite.max_rx, "Largest Nr for random MIMO instances");
  check_cmd->add_option("--nt", suite.max_tx, "Largest Nt for random MIMO instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*mimo_cmd) return run_sweep(mimo, antsel::Mode::kMimo);
    if (*relay_cmd) return run_sweep(relay, antsel::Mode::kRelay);
    if (*outage_cmd) return run_outage(outage);
    if (*counter_cmd) return run_counterexample(counter_bits);
    if (*check_cmd) return run_check(suite);
  } catch (const antsel::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const antsel::BudgetExceeded& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
