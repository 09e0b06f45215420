#pragma once

#include <optional>

#include "bfb/oracle.hpp"
#include "bfb/sketch_operator.hpp"
#include "bfb/types.hpp"

namespace bfb {

// Singular values below kRankTol * sigma_max count as zero.
inline constexpr double kRankTol = 1e-12;
// b is treated as lying in range(A) when r(A, b) <= kOptTol * |b|.
inline constexpr double kOptTol = 1e-12;

struct OrthoBasis {
  Matrix q;  // N x rank, orthonormal columns spanning range(A)
  Index rank = 0;
};

struct LeastSquaresSolution {
  Vector x;
  std::optional<double> residual_norm;  // |Ax - b|, only when the full b was available
  bool sketched_rank_ok = true;         // rank(SA) == rank(A)
  Index rank = 0;                       // rank of the matrix actually solved against
};

struct ResidualDecomposition {
  double full_sq = 0.0;        // r(A, b)^2
  double projection_sq = 0.0;  // |(SQ)^+ S Q_perp Q_perp^T b|^2
  double sketched_sq = 0.0;    // r_S(A, b)^2
};

Index numerical_rank(const Matrix& a, double rank_tol = kRankTol);

OrthoBasis orthonormal_basis(const Matrix& a, double rank_tol = kRankTol);

// Minimum-norm solution of min |M x - rhs| by SVD truncated at rank_tol * sigma_max.
Vector pinv_solve(const Matrix& m, const Vector& rhs, Index* rank = nullptr, double rank_tol = kRankTol);

// A together with its SVD, reused across many solves against the same design.
class LeastSquaresContext {
 public:
  explicit LeastSquaresContext(Matrix a, double rank_tol = kRankTol);

  const Matrix& a() const noexcept { return a_; }
  const OrthoBasis& basis() const noexcept { return basis_; }
  Index rank() const noexcept { return basis_.rank; }
  Index rows() const noexcept { return a_.rows(); }
  Index cols() const noexcept { return a_.cols(); }

  LeastSquaresSolution solve_full(const Vector& b) const;
  LeastSquaresSolution solve_sketched(const Vector& b, const SketchOperator& s) const;
  // Row samples query only their sampled entries; dense sketches need oracle.full().
  LeastSquaresSolution solve_sketched(EntryOracle& b, const SketchOperator& s) const;

  double residual(const Vector& x, const Vector& b) const;
  // Q_perp Q_perp^T b, computed as b - Q Q^T b.
  Vector orthogonal_part(const Vector& b) const;
  // r(A, b) = |Q_perp Q_perp^T b|.
  double optimal_residual(const Vector& b) const;

  ResidualDecomposition residual_decomposition(const Vector& b, const SketchOperator& s) const;
  double optimality_coefficient(const Vector& b, const SketchOperator& s) const;
  // |(SQ)^+ S Q_perp Q_perp^T b| / |Q_perp Q_perp^T b|; cross-check of the residual form.
  double optimality_coefficient_projection(const Vector& b, const SketchOperator& s) const;

 private:
  void check_rows(Index n, const char* what) const;
  void require_outside_range(const Vector& b) const;
  LeastSquaresSolution solve_sketched_system(const Matrix& sa, const Vector& sb) const;

  Matrix a_;
  double rank_tol_;
  OrthoBasis basis_;
  Eigen::MatrixXd right_;  // V, d x rank
  Eigen::VectorXd sigma_;  // leading singular values
};

LeastSquaresSolution solve_full_ls(const Matrix& a, const Vector& b);
LeastSquaresSolution solve_sketched_ls(const Matrix& a, const Vector& b, const SketchOperator& s);
LeastSquaresSolution solve_sketched_ls(const Matrix& a, EntryOracle& b, const SketchOperator& s);
ResidualDecomposition residual_decomposition(const Matrix& a, const Vector& b, const SketchOperator& s);
double optimality_coefficient(const Matrix& a, const Vector& b, const SketchOperator& s);

}  // namespace bfb
