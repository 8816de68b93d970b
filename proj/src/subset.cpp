#include "antsel/subset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace antsel {

AntennaSubset::AntennaSubset(std::size_t universe_size, std::vector<std::size_t> indices)
    : universe_size_(universe_size), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::invalid_argument("AntennaSubset: duplicate antenna index");
  if (!indices_.empty() && indices_.back() >= universe_size_)
    throw std::out_of_range("AntennaSubset: index " + std::to_string(indices_.back()) +
                            " outside universe of size " + std::to_string(universe_size_));
}

AntennaSubset AntennaSubset::full(std::size_t universe_size) {
  std::vector<std::size_t> all(universe_size);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return AntennaSubset(universe_size, std::move(all));
}

bool AntennaSubset::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

void AntennaSubset::insert(std::size_t index) {
  if (index >= universe_size_)
    throw std::out_of_range("AntennaSubset: index " + std::to_string(index) +
                            " outside universe of size " + std::to_string(universe_size_));
  auto pos = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (pos != indices_.end() && *pos == index)
    throw std::invalid_argument("AntennaSubset: antenna " + std::to_string(index) +
                                " already selected");
  indices_.insert(pos, index);
}

AntennaSubset AntennaSubset::with(std::size_t index) const {
  AntennaSubset out = *this;
  out.insert(index);
  return out;
}

std::vector<std::size_t> SelectionTrace::order() const {
  std::vector<std::size_t> out;
  out.reserve(chosen.size());
  for (const auto& s : chosen) out.push_back(s.antenna);
  return out;
}

}  // namespace antsel
