#include "bfb/wick.hpp"

#include <cmath>

#include "bfb/errors.hpp"
#include "bfb/rng.hpp"

namespace bfb {

WickCheck wick_mc_check(const Vector& w, const Vector& z, Index samples, std::uint64_t seed) {
  if (w.size() != z.size()) throw DimensionMismatch("wick_mc_check: w and z differ in length");
  if (!(w.norm() > 0.0) || !(z.norm() > 0.0)) throw InvalidArgument("wick_mc_check: w and z must be nonzero");
  if (samples < 1) throw InvalidArgument("wick_mc_check: need at least one sample");

  CounterRng rng(seed);
  Vector xi(w.size());
  double sum = 0.0;
  for (Index s = 0; s < samples; ++s) {
    for (Index i = 0; i < xi.size(); ++i) xi(i) = rng.normal();
    const double a = w.dot(xi);
    const double b = z.dot(xi);
    sum += a * a * b * b;
  }
  WickCheck out;
  out.mc_estimate = sum / static_cast<double>(samples);
  const double wz = w.dot(z);
  out.exact = 2.0 * wz * wz + w.squaredNorm() * z.squaredNorm();
  out.rel_err = std::abs(out.mc_estimate - out.exact) / out.exact;
  return out;
}

}  // namespace bfb
