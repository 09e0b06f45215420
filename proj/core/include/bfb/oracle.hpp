#pragma once

#include <functional>
#include <memory>
#include <span>
#include <unordered_map>

#include "bfb/types.hpp"

namespace bfb {

// On-demand access to the entries of an expensive data vector. Every distinct
// index is evaluated once and counted; repeated requests hit the cache.
// Not safe for concurrent queries: callers query from one task at a time.
class EntryOracle {
 public:
  using Source = std::function<double(Index)>;

  EntryOracle(Index n, Source source);
  // Oracle backed by a materialized vector, which stays attached for validation.
  static EntryOracle from_vector(Vector full);

  double operator()(Index i);
  Vector gather(std::span<const Index> indices);

  Index size() const noexcept { return n_; }
  Index queries() const noexcept { return static_cast<Index>(cache_.size()); }
  bool has_full() const noexcept { return full_ != nullptr; }
  const Vector& full() const;

  void reset() { cache_.clear(); }

 private:
  Index n_;
  Source source_;
  std::shared_ptr<const Vector> full_;
  std::unordered_map<Index, double> cache_;
};

// High-fidelity data behind an oracle, low-fidelity data fully materialized.
struct FidelityPair {
  Vector low;
  EntryOracle high;
};

}  // namespace bfb
