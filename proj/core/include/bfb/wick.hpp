#pragma once

#include <cstdint>

#include "bfb/types.hpp"

namespace bfb {

struct WickCheck {
  double mc_estimate = 0.0;
  double exact = 0.0;  // 2<w,z>^2 + |w|^2 |z|^2
  double rel_err = 0.0;
};

// Monte-Carlo estimate of E[<w,xi>^2 <z,xi>^2] for standard normal xi.
WickCheck wick_mc_check(const Vector& w, const Vector& z, Index samples, std::uint64_t seed);

}  // namespace bfb
