#pragma once

#include <cstdint>
#include <limits>

namespace bfb {

// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Seed of the independent stream `stream` derived from `base`. Used so that
// sketch l of a boosting run (or trial t of an experiment) is reproducible
// regardless of evaluation order.
std::uint64_t stream_seed(std::uint64_t base, std::uint64_t stream) noexcept;

// Counter-based generator: draw n is mix64(key + (n + 1) * golden). The whole
// state is (key, counter), so streams can be positioned without replay.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  // Uniform integer on [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) noexcept;
  // Standard normal via Box-Muller; the second variate is cached.
  double normal() noexcept;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bfb
