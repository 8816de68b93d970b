#include "antsel/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "antsel/harness.hpp"
#include "antsel/mimo.hpp"
#include "antsel/oracle.hpp"
#include "antsel/relay.hpp"

namespace antsel {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

struct MimoInstance {
  ComplexMatrix h;
  TransmitConfig tx;
};

MimoInstance random_mimo_instance(const SuiteOptions& o, std::size_t index) {
  Rng rng = substream(o.seed, index);
  std::uniform_int_distribution<std::size_t> rx_dist(2, std::max<std::size_t>(2, o.max_rx));
  const std::size_t nr = rx_dist(rng);
  std::uniform_int_distribution<std::size_t> tx_dist(1, std::min(nr, o.max_tx));
  const std::size_t nt = tx_dist(rng);
  const double powers[] = {0.1, 1.0, 10.0};
  const double p = powers[index % 3];
  return {sample_channel_mimo(nr, nt, rng), TransmitConfig(p, nt)};
}

}  // namespace

std::vector<SuiteOutcome> run_property_suites(const SuiteOptions& o) {
  std::vector<SuiteOutcome> out;

  {
    bool pass = true;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < o.instances; ++i) {
      const auto inst = random_mimo_instance(o, i);
      const auto r = check_monotone(mimo_capacity_function(inst.h, inst.tx), inst.h.rows(),
                                    o.checks_per_instance, o.seed + i);
      pass &= r.pass;
      worst = std::min(worst, r.min_margin);
    }
    out.push_back({"mimo capacity monotone", pass, fmt("min margin %.3e", worst)});
  }

  {
    bool pass = true;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < o.instances; ++i) {
      const auto inst = random_mimo_instance(o, i);
      const auto r = check_submodular(mimo_capacity_function(inst.h, inst.tx), inst.h.rows(),
                                      o.checks_per_instance, o.seed + i);
      pass &= r.pass;
      worst = std::min(worst, r.min_margin);
    }
    out.push_back({"mimo capacity submodular", pass, fmt("min margin %.3e", worst)});
  }

  {
    bool pass = true;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < o.instances; ++i) {
      const auto inst = random_mimo_instance(o, i);
      const auto r = check_submodular(gaussian_entropy_function(inst.h, inst.tx), inst.h.rows(),
                                      o.checks_per_instance, o.seed + i);
      pass &= r.pass;
      worst = std::min(worst, r.min_margin);
    }
    out.push_back({"gaussian entropy submodular", pass, fmt("min margin %.3e", worst)});
  }

  {
    bool pass = true;
    double drift = 0.0;
    for (std::size_t i = 0; i < o.instances; ++i) {
      Rng rng = substream(o.seed ^ 0x7e1a7ULL, i);
      const RelayLinkSet links = sample_channel_relay(16, rng);
      const auto r = check_submodular(relay_snr_function(links), 16, o.checks_per_instance,
                                      o.seed + i);
      pass &= r.pass;
      drift = std::max(drift, r.max_equality_drift);
    }
    out.push_back({"relay snr modular", pass, fmt("max drift %.3e", drift)});
  }

  {
    const double bound = 1.0 - 1.0 / std::numbers::e;
    bool pass = true;
    double min_ratio = std::numeric_limits<double>::infinity();
    const std::size_t n = std::min<std::size_t>(o.instances, 100);
    for (std::size_t i = 0; i < n; ++i) {
      Rng rng = substream(o.seed ^ 0x9a11ULL, i);
      const double powers[] = {0.1, 1.0, 10.0};
      const TransmitConfig tx(powers[i % 3], 4);
      const ComplexMatrix h = sample_channel_mimo(10, 4, rng);
      const double greedy = greedy_select_mimo(h, 4, tx).trace.final_value;
      const double best = brute_force_select_mimo(h, 4, tx).value;
      const double ratio = greedy / best;
      min_ratio = std::min(min_ratio, ratio);
      pass &= ratio >= bound - 1e-9;
    }
    out.push_back({"mimo greedy within 1-1/e", pass, fmt("min ratio %.6f (bound %.6f)", min_ratio, bound)});
  }

  {
    bool pass = true;
    double worst = 0.0;
    const std::size_t n = std::min<std::size_t>(o.instances, 50);
    for (std::size_t i = 0; i < n; ++i) {
      Rng rng = substream(o.seed ^ 0x0b7ULL, i);
      const RelayLinkSet links = sample_channel_relay(12, rng);
      for (std::size_t l = 1; l <= 12; ++l) {
        const double greedy = greedy_select_relay(links, l).trace.final_value;
        const double best = brute_force_select_relay(links, l).value;
        worst = std::max(worst, std::abs(best - greedy));
        pass &= std::abs(best - greedy) <= 1e-12;
      }
    }
    out.push_back({"relay greedy optimal", pass, fmt("max gap %.3e", worst)});
  }

  {
    const ComplexMatrix h{{1.0, 0.0}};
    const auto r = check_monotone(transmit_capacity_function(h, 1.0), 2, 0, o.seed);
    out.push_back({"transmit selection non-monotone witness", !r.pass,
                   fmt("min margin %.6f", r.min_margin)});
  }

  return out;
}

}  // namespace antsel
