#pragma once

#include <span>
#include <vector>

#include "bfb/rng.hpp"
#include "bfb/types.hpp"

namespace bfb {

// Walker/Vose alias table: O(n) setup, O(1) draws from a fixed discrete law.
class AliasTable {
 public:
  AliasTable() = default;
  // Weights need not be normalized; they must be finite, nonnegative, with a positive sum.
  explicit AliasTable(std::span<const double> weights);

  Index draw(CounterRng& rng) const;
  Index size() const noexcept { return static_cast<Index>(prob_.size()); }
  // Normalized probability of outcome i.
  double probability(Index i) const { return normalized_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<double> prob_;
  std::vector<Index> alias_;
  std::vector<double> normalized_;
};

}  // namespace bfb
