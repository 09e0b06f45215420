#include "bfb/synthetic.hpp"

#include <cmath>

#include "bfb/errors.hpp"
#include "bfb/rng.hpp"

namespace bfb {

namespace {

Matrix gaussian_matrix(Index n, Index d, std::uint64_t seed) {
  CounterRng rng(seed);
  Matrix a(n, d);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < d; ++j) a(i, j) = rng.normal();
  return a;
}

Vector unit_gaussian(Index len, std::uint64_t seed) {
  CounterRng rng(seed);
  Vector z(len);
  for (Index i = 0; i < len; ++i) z(i) = rng.normal();
  return z / z.norm();
}

Matrix checked_design(Index n, Index d, std::uint64_t seed) {
  if (d < 2 || n < d + 2) throw InvalidArgument("synthetic data needs d >= 2 and d < N - 1");
  return gaussian_matrix(n, d, stream_seed(seed, 0));
}

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

SyntheticGenerator::SyntheticGenerator(Index n, Index d, std::uint64_t seed)
    : a_(checked_design(n, d, seed)),
      ctx_(a_),
      qr_(Eigen::MatrixXd(a_)),
      z1_(unit_gaussian(d - 1, stream_seed(seed, 1))),
      z2_(unit_gaussian(n - d - 1, stream_seed(seed, 2))),
      z3_(unit_gaussian(n - 2, stream_seed(seed, 3))) {
  if (ctx_.rank() != d) throw NumericalError("synthetic design is rank deficient");
}

Vector SyntheticGenerator::high(double kappa) const {
  require_unit(kappa, "kappa");
  const Index n = this->n();
  const Index d = this->d();
  Vector coords = Vector::Zero(n);
  coords.head(d - 1) = kappa * z1_;
  coords.segment(d, n - d - 1) = std::sqrt(1.0 - kappa * kappa) * z2_;
  return qr_.householderQ() * coords;
}

Vector SyntheticGenerator::low(const Vector& b, double phi) const {
  require_unit(phi, "phi");
  const Index n = this->n();
  if (b.size() != n) throw DimensionMismatch("synthetic low-fidelity vector: wrong length");
  Eigen::HouseholderQR<Eigen::MatrixXd> qb{Eigen::MatrixXd(b)};
  Vector coords = Vector::Zero(n);
  coords.segment(1, n - 2) = z3_;
  const Vector perp = qb.householderQ() * coords;
  return phi * b + std::sqrt(1.0 - phi * phi) * perp;
}

SyntheticPair SyntheticGenerator::pair(double kappa, double phi) const {
  SyntheticPair out{a_, high(kappa), Vector()};
  out.bt = low(out.b, phi);
  return out;
}

SyntheticPair synthetic_pair(const SyntheticSpec& spec) {
  return SyntheticGenerator(spec.n, spec.d, spec.seed).pair(spec.kappa, spec.phi);
}

}  // namespace bfb
