#include "antsel/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "antsel/mimo.hpp"

namespace antsel {

Rng substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x5eedu};
  return Rng(seq);
}

ComplexMatrix sample_channel_mimo(std::size_t num_rx, std::size_t num_tx, Rng& rng) {
  std::normal_distribution<double> component(0.0, std::sqrt(0.5));
  std::vector<Complex> entries(num_rx * num_tx);
  for (auto& z : entries) {
    const double re = component(rng);
    const double im = component(rng);
    z = {re, im};
  }
  return ComplexMatrix(num_rx, num_tx, std::move(entries));
}

RelayLinkSet sample_channel_relay(std::size_t num_relays, Rng& rng) {
  std::normal_distribution<double> component(0.0, std::sqrt(0.5));
  const auto draw = [&] {
    ComplexVector v(num_relays);
    for (auto& z : v) {
      const double re = component(rng);
      const double im = component(rng);
      z = {re, im};
    }
    return v;
  };
  ComplexVector f = draw();
  ComplexVector g = draw();
  return RelayLinkSet(std::move(f), std::move(g));
}

std::string to_string(Mode mode) { return mode == Mode::kMimo ? "mimo" : "relay"; }

void ExperimentConfig::validate() const {
  if (universe < 1) throw ConfigError("antenna count must be at least 1");
  if (mode == Mode::kMimo) {
    if (num_tx < 1) throw ConfigError("Nt must be at least 1");
    if (!(power > 0.0) || !std::isfinite(power)) throw ConfigError("power must be positive");
  }
  if (l_values.empty()) throw ConfigError("L range is empty");
  for (std::size_t l : l_values)
    if (l < 1 || l > universe)
      throw ConfigError("L = " + std::to_string(l) + " outside [1, " + std::to_string(universe) +
                        "]");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (threads < 1) throw ConfigError("threads must be at least 1");
  if (outage_rate && (!(*outage_rate >= 0.0) || !std::isfinite(*outage_rate)))
    throw ConfigError("outage rate must be finite and non-negative");
}

std::vector<std::size_t> parse_count_range(const std::string& text) {
  const auto parse_one = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("invalid count '" + s + "' in range '" + text + "'");
    return std::stoul(s);
  };
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = parse_one(text.substr(0, dots));
    const std::size_t hi = parse_one(text.substr(dots + 2));
    if (lo > hi) throw ConfigError("empty range '" + text + "'");
    for (std::size_t l = lo; l <= hi; ++l) out.push_back(l);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_one(item));
  if (out.empty()) throw ConfigError("empty range");
  return out;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

/// Calls body(t) for every trial; trial t goes to worker t % threads.
template <typename Body>
void for_each_trial(std::size_t trials, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(threads, trials);
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) body(t);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = w; t < trials; t += workers) body(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct Moments {
  double mean = 0.0;
  double std_error = 0.0;
};

Moments moments(std::span<const double> values) {
  const double n = static_cast<double>(values.size());
  Moments m;
  m.mean = pairwise_sum(values) / n;
  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - m.mean) * (values[i] - m.mean);
    m.std_error = std::sqrt(pairwise_sum(sq) / (n - 1.0) / n);
  }
  return m;
}

ComplexMatrix draw_mimo(const ExperimentConfig& cfg, Rng& rng) {
  return cfg.mimo_sampler ? cfg.mimo_sampler(cfg.universe, cfg.num_tx, rng)
                          : sample_channel_mimo(cfg.universe, cfg.num_tx, rng);
}

RelayLinkSet draw_relay(const ExperimentConfig& cfg, Rng& rng) {
  return cfg.relay_sampler ? cfg.relay_sampler(cfg.universe, rng)
                           : sample_channel_relay(cfg.universe, rng);
}

/// Capacity (nats) of the first `l` greedy choices.
double prefix_capacity_mimo(const ComplexMatrix& h, const SelectionTrace& trace, std::size_t l,
                            const TransmitConfig& tx) {
  const auto order = trace.order();
  return mimo_capacity(h, AntennaSubset(h.rows(), {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(l)}), tx);
}

double prefix_capacity_relay(const RelayGainTable& table, const SelectionTrace& trace,
                             std::size_t l) {
  const auto order = trace.order();
  return relay_capacity(relay_snr_closed_form(
      table, AntennaSubset(table.size(), {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(l)})));
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  const std::size_t num_l = cfg.l_values.size();
  const std::size_t l_max = *std::max_element(cfg.l_values.begin(), cfg.l_values.end());

  std::vector<bool> brute(num_l, false);
  for (std::size_t k = 0; k < num_l; ++k) {
    if (!cfg.brute_force) continue;
    const std::uint64_t count = binomial(cfg.universe, cfg.l_values[k]);
    brute[k] = count <= cfg.budget;
    if (!brute[k])
      result.warnings.push_back("brute force disabled for L=" + std::to_string(cfg.l_values[k]) +
                                ": C(" + std::to_string(cfg.universe) + "," +
                                std::to_string(cfg.l_values[k]) + ")=" + std::to_string(count) +
                                " exceeds budget " + std::to_string(cfg.budget));
  }

  // [l index][trial]
  std::vector<std::vector<double>> greedy(num_l, std::vector<double>(cfg.trials));
  std::vector<std::vector<double>> optimal(num_l, std::vector<double>(cfg.trials));

  for_each_trial(cfg.trials, cfg.threads, [&](std::size_t t) {
    Rng rng = substream(cfg.seed, t);
    if (cfg.mode == Mode::kMimo) {
      const TransmitConfig tx(cfg.power, cfg.num_tx);
      const ComplexMatrix h = draw_mimo(cfg, rng);
      const SelectionResult sel = greedy_select_mimo(h, l_max, tx);
      for (std::size_t k = 0; k < num_l; ++k) {
        greedy[k][t] = prefix_capacity_mimo(h, sel.trace, cfg.l_values[k], tx);
        if (brute[k])
          optimal[k][t] = brute_force_select_mimo(h, cfg.l_values[k], tx, cfg.budget).value;
      }
    } else {
      const RelayLinkSet links = draw_relay(cfg, rng);
      const RelayGainTable table(links);
      const SelectionResult sel = greedy_select_relay(links, l_max);
      for (std::size_t k = 0; k < num_l; ++k) {
        greedy[k][t] = prefix_capacity_relay(table, sel.trace, cfg.l_values[k]);
        if (brute[k])
          optimal[k][t] =
              relay_capacity(brute_force_select_relay(links, cfg.l_values[k], cfg.budget).value);
      }
    }
  });

  for (std::size_t k = 0; k < num_l; ++k) {
    ResultRow row;
    row.num_select = cfg.l_values[k];
    row.trials = cfg.trials;
    const Moments g = moments(greedy[k]);
    row.mean_greedy = g.mean;
    row.stderr_greedy = g.std_error;
    if (brute[k]) {
      const Moments o = moments(optimal[k]);
      row.mean_optimal = o.mean;
      row.stderr_optimal = o.std_error;
      if (o.mean > 0.0) row.ratio = g.mean / o.mean;
    }
    result.rows.push_back(row);
  }

  if (!cfg.output_path.empty()) write_file_atomic(cfg.output_path, format_csv(cfg, result));
  return result;
}

std::string format_csv(const ExperimentConfig& cfg, const ExperimentResult& result) {
  const double unit = cfg.bits ? 1.0 / std::numbers::ln2 : 1.0;
  std::ostringstream out;
  for (const auto& w : result.warnings) out << "# " << w << '\n';
  out << "mode,L,trials,mean_greedy,stderr_greedy,mean_optimal,stderr_optimal,ratio,seed\n";
  const auto opt = [&](const std::optional<double>& v, double scale) {
    return v ? format_number(*v * scale) : std::string();
  };
  for (const auto& r : result.rows) {
    out << to_string(cfg.mode) << ',' << r.num_select << ',' << r.trials << ','
        << format_number(r.mean_greedy * unit) << ',' << format_number(r.stderr_greedy * unit)
        << ',' << opt(r.mean_optimal, unit) << ',' << opt(r.stderr_optimal, unit) << ','
        << opt(r.ratio, 1.0) << ',' << cfg.seed << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + tmp.string() + "' for writing");
    f << contents;
    f.flush();
    if (!f) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

OutageEstimate estimate_outage_for(const ExperimentConfig& cfg, double rate, std::size_t l) {
  cfg.validate();
  if (!(rate >= 0.0) || !std::isfinite(rate))
    throw ConfigError("outage rate must be finite and non-negative");
  if (l < 1 || l > cfg.universe) throw ConfigError("L out of range for outage estimate");

  std::vector<unsigned char> outage(cfg.trials, 0);
  for_each_trial(cfg.trials, cfg.threads, [&](std::size_t t) {
    Rng rng = substream(cfg.seed, t);
    double capacity = 0.0;
    if (cfg.mode == Mode::kMimo) {
      const TransmitConfig tx(cfg.power, cfg.num_tx);
      const ComplexMatrix h = draw_mimo(cfg, rng);
      capacity = mimo_capacity(h, greedy_select_mimo(h, l, tx).subset, tx);
    } else {
      const RelayLinkSet links = draw_relay(cfg, rng);
      capacity = relay_capacity(relay_snr_closed_form(links, greedy_select_relay(links, l).subset));
    }
    outage[t] = capacity <= rate ? 1 : 0;
  });

  OutageEstimate est;
  est.num_select = l;
  est.trials = cfg.trials;
  est.outages = static_cast<std::size_t>(std::count(outage.begin(), outage.end(), 1));
  const double n = static_cast<double>(cfg.trials);
  est.probability = static_cast<double>(est.outages) / n;
  est.std_error = std::sqrt(est.probability * (1.0 - est.probability) / n);
  return est;
}

std::vector<OutageEstimate> estimate_outage(const ExperimentConfig& cfg, double rate) {
  cfg.validate();
  std::vector<OutageEstimate> out;
  for (std::size_t l : cfg.l_values) out.push_back(estimate_outage_for(cfg, rate, l));
  return out;
}

}  // namespace antsel
