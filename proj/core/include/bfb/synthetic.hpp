#pragma once

#include <cstdint>

#include "bfb/linalg.hpp"
#include "bfb/types.hpp"

namespace bfb {

struct SyntheticSpec {
  Index n = 1000;
  Index d = 50;
  double kappa = 0.2;
  double phi = 0.95;
  std::uint64_t seed = 1;
};

struct SyntheticPair {
  Matrix a;
  Vector b;
  Vector bt;
};

// Fixed Gaussian design A (N x d) and fixed unit Gaussian directions z1, z2, z3
// (lengths d-1, N-d-1, N-2), all derived from one seed. pair(kappa, phi) returns
//   b  = kappa Q z1 + sqrt(1 - kappa^2) Q_perp z2
//   b~ = phi b + sqrt(1 - phi^2) b_perp z3
// where each z occupies the leading coordinates of its block (trailing entry zero),
// [Q Q_perp] is the full orthogonal factor of A, and b_perp completes b/|b|.
class SyntheticGenerator {
 public:
  SyntheticGenerator(Index n, Index d, std::uint64_t seed);

  const Matrix& a() const noexcept { return a_; }
  const LeastSquaresContext& context() const noexcept { return ctx_; }
  Index n() const noexcept { return a_.rows(); }
  Index d() const noexcept { return a_.cols(); }

  Vector high(double kappa) const;
  Vector low(const Vector& b, double phi) const;
  SyntheticPair pair(double kappa, double phi) const;

 private:
  Matrix a_;
  LeastSquaresContext ctx_;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr_;
  Vector z1_;
  Vector z2_;
  Vector z3_;
};

SyntheticPair synthetic_pair(const SyntheticSpec& spec);

}  // namespace bfb
