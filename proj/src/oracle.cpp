#include "antsel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

namespace antsel {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < k; ++i) {
    // acc * (n - i) / (i + 1) stays exact; divide by the gcd first to delay overflow.
    const std::uint64_t num = n - i;
    const std::uint64_t den = i + 1;
    const std::uint64_t g = std::gcd(acc, den);
    const std::uint64_t a = acc / g;
    const std::uint64_t d = den / g;
    const std::uint64_t m = num / d;  // d divides num once acc/g is coprime to d
    if (a > kMax / m) return kMax;
    acc = a * m;
  }
  return acc;
}

SubsetEnumeration::SubsetEnumeration(std::size_t universe_size, std::size_t cardinality)
    : n_(universe_size), k_(cardinality), current_(cardinality) {
  std::iota(current_.begin(), current_.end(), std::size_t{0});
  done_ = k_ > n_;
}

void SubsetEnumeration::advance() {
  if (done_) return;
  std::size_t i = k_;
  while (i > 0 && current_[i - 1] == n_ - k_ + (i - 1)) --i;
  if (i == 0) {
    done_ = true;
    return;
  }
  ++current_[i - 1];
  for (std::size_t j = i; j < k_; ++j) current_[j] = current_[j - 1] + 1;
}

void SubsetEnumeration::seek(std::uint64_t rank) {
  if (k_ > n_ || rank >= count()) {
    done_ = true;
    return;
  }
  done_ = false;
  std::size_t next = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    // Number of completions when position i holds `next`.
    for (;;) {
      const std::uint64_t block = binomial(n_ - next - 1, k_ - i - 1);
      if (rank < block) break;
      rank -= block;
      ++next;
    }
    current_[i] = next++;
  }
}

namespace {

void require_budget(std::size_t n, std::size_t k, std::uint64_t budget) {
  const std::uint64_t count = binomial(n, k);
  if (count > budget)
    throw BudgetExceeded("brute force over C(" + std::to_string(n) + ", " + std::to_string(k) +
                         ") = " + std::to_string(count) + " subsets exceeds budget " +
                         std::to_string(budget));
}

void require_selection_size(std::size_t num_select, std::size_t universe) {
  if (num_select < 1 || num_select > universe)
    throw std::invalid_argument("L = " + std::to_string(num_select) + " outside [1, " +
                                std::to_string(universe) + "]");
}

template <typename Objective>
BruteForceResult enumerate_best(std::size_t n, std::size_t k, Objective&& objective) {
  BruteForceResult best{AntennaSubset(n), -std::numeric_limits<double>::infinity()};
  std::vector<std::size_t> best_indices;
  for (SubsetEnumeration e(n, k); !e.done(); e.advance()) {
    const double v = objective(e.current());
    // Strict comparison keeps the lexicographically first maximizer.
    if (v > best.value) {
      best.value = v;
      best_indices.assign(e.current().begin(), e.current().end());
    }
  }
  best.subset = AntennaSubset(n, std::move(best_indices));
  return best;
}

std::vector<std::size_t> members(std::uint64_t mask, std::size_t universe) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe; ++i)
    if (mask >> i & 1U) out.push_back(i);
  return out;
}

/// Memoized evaluation of a set function on bitmask-encoded subsets.
class MaskEvaluator {
 public:
  MaskEvaluator(const SetFunctionHandle& f, std::size_t universe) : f_(f), universe_(universe) {
    if (universe > 63) throw std::invalid_argument("property checks support universes up to 63");
  }

  double operator()(std::uint64_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    const auto set = members(mask, universe_);
    const double v = f_.eval(set);
    cache_.emplace(mask, v);
    return v;
  }

 private:
  const SetFunctionHandle& f_;
  std::size_t universe_;
  std::unordered_map<std::uint64_t, double> cache_;
};

std::uint64_t random_subset_of_size(std::size_t universe, std::size_t size, std::mt19937_64& rng) {
  std::vector<std::size_t> all(universe);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::shuffle(all.begin(), all.end(), rng);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < size; ++i) mask |= std::uint64_t{1} << all[i];
  return mask;
}

std::size_t random_outside(std::uint64_t mask, std::size_t universe, std::mt19937_64& rng) {
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < universe; ++i)
    if (!(mask >> i & 1U)) outside.push_back(i);
  std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
  return outside[pick(rng)];
}

}  // namespace

BruteForceResult brute_force_select_mimo(const ComplexMatrix& h, std::size_t num_select,
                                         const TransmitConfig& cfg, std::uint64_t budget) {
  require_selection_size(num_select, h.rows());
  require_budget(h.rows(), num_select, budget);
  const std::size_t n = h.rows();
  return enumerate_best(n, num_select, [&](std::span<const std::size_t> s) {
    return mimo_capacity(h, AntennaSubset(n, {s.begin(), s.end()}), cfg);
  });
}

BruteForceResult brute_force_select_relay(const RelayLinkSet& links, std::size_t num_select,
                                          std::uint64_t budget) {
  require_selection_size(num_select, links.size());
  require_budget(links.size(), num_select, budget);
  const RelayGainTable table(links);
  const std::size_t n = links.size();
  return enumerate_best(n, num_select, [&](std::span<const std::size_t> s) {
    return relay_snr_closed_form(table, AntennaSubset(n, {s.begin(), s.end()}));
  });
}

SetFunctionHandle mimo_capacity_function(ComplexMatrix h, TransmitConfig cfg) {
  return {"mimo capacity", [h = std::move(h), cfg](std::span<const std::size_t> s) {
            return mimo_capacity(h, AntennaSubset(h.rows(), {s.begin(), s.end()}), cfg);
          }};
}

SetFunctionHandle gaussian_entropy_function(ComplexMatrix h, TransmitConfig cfg) {
  const ComplexMatrix cov = identity_plus_outer(h, cfg.per_antenna_power());
  return {"gaussian entropy", [cov](std::span<const std::size_t> s) {
            if (s.empty()) return 0.0;
            return gaussian_entropy(HermitianPD(cov.principal_submatrix(s)));
          }};
}

SetFunctionHandle relay_snr_function(const RelayLinkSet& links) {
  return {"relay snr",
          [table = RelayGainTable(links)](std::span<const std::size_t> s) {
            return relay_snr_closed_form(table, AntennaSubset(table.size(), {s.begin(), s.end()}));
          },
          true};
}

SetFunctionHandle transmit_capacity_function(ComplexMatrix h, double power) {
  return {"transmit capacity", [h = std::move(h), power](std::span<const std::size_t> s) {
            return transmit_subset_capacity(h, AntennaSubset(h.cols(), {s.begin(), s.end()}),
                                            power);
          }};
}

SetFunctionHandle max_function(std::vector<double> values) {
  return {"max", [values = std::move(values)](std::span<const std::size_t> s) {
            double m = 0.0;
            for (std::size_t i : s) m = std::max(m, values.at(i));
            return m;
          }};
}

MonotoneReport check_monotone(const SetFunctionHandle& f, std::size_t universe,
                              std::size_t trials, std::uint64_t seed) {
  MaskEvaluator eval(f, universe);
  MonotoneReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  const auto visit = [&](std::uint64_t base, std::size_t a) {
    const double margin = eval(base | std::uint64_t{1} << a) - eval(base);
    ++report.checks;
    if (margin < report.min_margin) {
      report.min_margin = margin;
      if (margin < -kMonotoneTolerance)
        report.witness = MonotoneWitness{members(base, universe), a, margin};
    }
  };

  if (universe == 0) {
    report.min_margin = 0.0;
    return report;
  }
  if (universe <= kExhaustiveUniverse) {
    report.exhaustive = true;
    for (std::uint64_t base = 0; base < (std::uint64_t{1} << universe); ++base)
      for (std::size_t a = 0; a < universe; ++a)
        if (!(base >> a & 1U)) visit(base, a);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(0, universe - 1);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t base = random_subset_of_size(universe, size_dist(rng), rng);
      visit(base, random_outside(base, universe, rng));
    }
  }
  if (report.checks == 0) report.min_margin = 0.0;
  report.pass = report.min_margin >= -kMonotoneTolerance;
  return report;
}

SubmodularReport check_submodular(const SetFunctionHandle& f, std::size_t universe,
                                  std::size_t trials, std::uint64_t seed) {
  MaskEvaluator eval(f, universe);
  SubmodularReport report;
  report.equality_checked = f.modular;
  report.min_margin = std::numeric_limits<double>::infinity();
  bool inequality_witness = false;
  const auto visit = [&](std::uint64_t small, std::uint64_t large, std::size_t a) {
    const std::uint64_t bit = std::uint64_t{1} << a;
    const double margin = (eval(small | bit) - eval(small)) - (eval(large | bit) - eval(large));
    ++report.checks;
    const bool worst_margin = margin < report.min_margin;
    const bool worst_drift = std::abs(margin) > report.max_equality_drift;
    report.min_margin = std::min(report.min_margin, margin);
    report.max_equality_drift = std::max(report.max_equality_drift, std::abs(margin));
    const auto record = [&] {
      report.witness = SubmodularWitness{members(small, universe), members(large, universe), a,
                                         margin};
    };
    if (margin < -kSubmodularTolerance && worst_margin) {
      record();
      inequality_witness = true;
    } else if (f.modular && !inequality_witness && worst_drift &&
               std::abs(margin) > kModularTolerance) {
      record();
    }
  };

  if (universe == 0) {
    report.min_margin = 0.0;
    return report;
  }
  if (universe <= kExhaustiveUniverse) {
    report.exhaustive = true;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < universe; ++i) combos *= 3;
    for (std::uint64_t code = 0; code < combos; ++code) {
      // Digit per element: 0 outside T, 1 in T only, 2 in S (and T).
      std::uint64_t small = 0, large = 0, c = code;
      for (std::size_t i = 0; i < universe; ++i, c /= 3) {
        const std::uint64_t digit = c % 3;
        if (digit >= 1) large |= std::uint64_t{1} << i;
        if (digit == 2) small |= std::uint64_t{1} << i;
      }
      for (std::size_t a = 0; a < universe; ++a)
        if (!(large >> a & 1U)) visit(small, large, a);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(0, universe - 1);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t large = random_subset_of_size(universe, size_dist(rng), rng);
      std::uint64_t small = 0;
      for (std::size_t i = 0; i < universe; ++i)
        if ((large >> i & 1U) && coin(rng)) small |= std::uint64_t{1} << i;
      visit(small, large, random_outside(large, universe, rng));
    }
  }
  if (report.checks == 0) report.min_margin = 0.0;
  report.inequality_pass = report.min_margin >= -kSubmodularTolerance;
  report.equality_pass = !f.modular || report.max_equality_drift <= kModularTolerance;
  report.pass = report.inequality_pass && report.equality_pass;
  return report;
}

}  // namespace antsel
