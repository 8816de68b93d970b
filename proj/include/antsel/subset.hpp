#ifndef ANTSEL_SUBSET_HPP
#define ANTSEL_SUBSET_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace antsel {

/// Distinct antenna indices drawn from [0, universe_size), kept sorted.
class AntennaSubset {
 public:
  AntennaSubset() = default;
  explicit AntennaSubset(std::size_t universe_size) : universe_size_(universe_size) {}
  /// Validates range and uniqueness; input order does not matter.
  AntennaSubset(std::size_t universe_size, std::vector<std::size_t> indices);

  static AntennaSubset full(std::size_t universe_size);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::span<const std::size_t> indices() const { return indices_; }

  bool contains(std::size_t index) const;
  /// Throws if the index is out of range or already present.
  void insert(std::size_t index);
  AntennaSubset with(std::size_t index) const;

  friend bool operator==(const AntennaSubset&, const AntennaSubset&) = default;

 private:
  std::size_t universe_size_ = 0;
  std::vector<std::size_t> indices_;
};

struct SelectionStep {
  std::size_t step = 0;
  std::size_t antenna = 0;
  double gain = 0.0;
};

/// Greedy choices in selection order. Values are in nats for MIMO capacity
/// and linear SNR for relay selection.
struct SelectionTrace {
  std::vector<SelectionStep> chosen;
  double final_value = 0.0;

  std::vector<std::size_t> order() const;
};

struct SelectionResult {
  AntennaSubset subset;
  SelectionTrace trace;
};

}  // namespace antsel

#endif  // ANTSEL_SUBSET_HPP
