#include "bfb/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "bfb/errors.hpp"

namespace bfb {

namespace {

using DenseColMajor = Eigen::MatrixXd;

Index count_above(const Eigen::VectorXd& sigma, double rank_tol) {
  if (sigma.size() == 0 || sigma(0) <= 0.0) return 0;
  const double cutoff = rank_tol * sigma(0);
  Index r = 0;
  while (r < sigma.size() && sigma(r) > cutoff) ++r;
  return r;
}

void require_finite(const Matrix& a) {
  if (a.rows() < 1 || a.cols() < 1) throw InvalidArgument("matrix must have at least one row and column");
  if (!a.allFinite()) throw InvalidArgument("matrix entries must be finite");
}

}  // namespace

Index numerical_rank(const Matrix& a, double rank_tol) {
  require_finite(a);
  Eigen::BDCSVD<DenseColMajor> svd(DenseColMajor(a), Eigen::ComputeThinU | Eigen::ComputeThinV);
  return count_above(svd.singularValues(), rank_tol);
}

OrthoBasis orthonormal_basis(const Matrix& a, double rank_tol) {
  require_finite(a);
  if (a.rows() < a.cols()) throw InvalidArgument("orthonormal_basis expects rows >= cols");
  Eigen::BDCSVD<DenseColMajor> svd(DenseColMajor(a), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Index r = count_above(svd.singularValues(), rank_tol);
  if (r == 0) throw ZeroRankError();
  return OrthoBasis{Matrix(svd.matrixU().leftCols(r)), r};
}

Vector pinv_solve(const Matrix& m, const Vector& rhs, Index* rank, double rank_tol) {
  if (m.rows() != rhs.size()) throw DimensionMismatch("pinv_solve: rhs length differs from row count");
  Eigen::BDCSVD<DenseColMajor> svd(DenseColMajor(m), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const Index r = count_above(sigma, rank_tol);
  if (rank) *rank = r;
  Vector x = Vector::Zero(m.cols());
  if (r == 0) return x;
  const Eigen::VectorXd coeff =
      (svd.matrixU().leftCols(r).transpose() * rhs).cwiseQuotient(sigma.head(r));
  x = svd.matrixV().leftCols(r) * coeff;
  return x;
}

LeastSquaresContext::LeastSquaresContext(Matrix a, double rank_tol) : a_(std::move(a)), rank_tol_(rank_tol) {
  require_finite(a_);
  if (a_.rows() < a_.cols()) throw InvalidArgument("design matrix must have rows >= cols");
  Eigen::BDCSVD<DenseColMajor> svd(DenseColMajor(a_), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Index r = count_above(svd.singularValues(), rank_tol_);
  if (r == 0) throw ZeroRankError();
  basis_ = OrthoBasis{Matrix(svd.matrixU().leftCols(r)), r};
  right_ = svd.matrixV().leftCols(r);
  sigma_ = svd.singularValues().head(r);
}

void LeastSquaresContext::check_rows(Index n, const char* what) const {
  if (n != a_.rows()) throw DimensionMismatch(std::string(what) + ": length differs from design row count");
}

LeastSquaresSolution LeastSquaresContext::solve_full(const Vector& b) const {
  check_rows(b.size(), "solve_full_ls");
  LeastSquaresSolution out;
  const Eigen::VectorXd coeff = (basis_.q.transpose() * b).cwiseQuotient(sigma_);
  out.x = right_ * coeff;
  out.residual_norm = residual(out.x, b);
  out.rank = basis_.rank;
  out.sketched_rank_ok = true;
  return out;
}

LeastSquaresSolution LeastSquaresContext::solve_sketched_system(const Matrix& sa, const Vector& sb) const {
  LeastSquaresSolution out;
  Index r = 0;
  out.x = pinv_solve(sa, sb, &r, rank_tol_);
  out.rank = r;
  out.sketched_rank_ok = (r == basis_.rank);
  return out;
}

LeastSquaresSolution LeastSquaresContext::solve_sketched(const Vector& b, const SketchOperator& s) const {
  check_rows(b.size(), "solve_sketched_ls");
  check_rows(s.n(), "solve_sketched_ls (sketch)");
  LeastSquaresSolution out = solve_sketched_system(s.apply(a_), s.apply(b));
  out.residual_norm = residual(out.x, b);
  return out;
}

LeastSquaresSolution LeastSquaresContext::solve_sketched(EntryOracle& b, const SketchOperator& s) const {
  check_rows(b.size(), "solve_sketched_ls");
  check_rows(s.n(), "solve_sketched_ls (sketch)");
  if (!s.is_row_sample()) {
    if (!b.has_full()) throw FullVectorRequired();
    // Every entry is consumed by a dense sketch.
    for (Index i = 0; i < b.size(); ++i) b(i);
    return solve_sketched_system(s.apply(a_), s.apply(b.full()));
  }
  const RowSample& rows = s.rows();
  Vector sb(static_cast<Index>(rows.indices.size()));
  for (std::size_t j = 0; j < rows.indices.size(); ++j)
    sb(static_cast<Index>(j)) = rows.weights[j] * b(rows.indices[j]);
  return solve_sketched_system(s.apply(a_), sb);
}

double LeastSquaresContext::residual(const Vector& x, const Vector& b) const {
  check_rows(b.size(), "residual");
  if (x.size() != a_.cols()) throw DimensionMismatch("residual: solution length differs from design column count");
  return (a_ * x - b).norm();
}

Vector LeastSquaresContext::orthogonal_part(const Vector& b) const {
  check_rows(b.size(), "orthogonal_part");
  return b - basis_.q * (basis_.q.transpose() * b);
}

double LeastSquaresContext::optimal_residual(const Vector& b) const { return orthogonal_part(b).norm(); }

void LeastSquaresContext::require_outside_range(const Vector& b) const {
  const double r = optimal_residual(b);
  if (!(r > kOptTol * b.norm()))
    throw DegenerateDataError("data vector lies in range(A); optimality coefficient undefined");
}

ResidualDecomposition LeastSquaresContext::residual_decomposition(const Vector& b, const SketchOperator& s) const {
  check_rows(b.size(), "residual_decomposition");
  check_rows(s.n(), "residual_decomposition (sketch)");
  const Matrix sq = s.apply(basis_.q);
  Index sketched_rank = 0;
  const Vector perp = orthogonal_part(b);
  const Vector proj = pinv_solve(sq, s.apply(perp), &sketched_rank, rank_tol_);
  if (sketched_rank != basis_.rank) throw RankDropError(static_cast<std::size_t>(sketched_rank),
                                                        static_cast<std::size_t>(basis_.rank));
  const LeastSquaresSolution sol = solve_sketched(b, s);
  ResidualDecomposition out;
  out.full_sq = perp.squaredNorm();
  out.projection_sq = proj.squaredNorm();
  out.sketched_sq = (*sol.residual_norm) * (*sol.residual_norm);
  return out;
}

double LeastSquaresContext::optimality_coefficient(const Vector& b, const SketchOperator& s) const {
  check_rows(b.size(), "optimality_coefficient");
  require_outside_range(b);
  const LeastSquaresSolution sol = solve_sketched(b, s);
  if (!sol.sketched_rank_ok)
    throw RankDropError(static_cast<std::size_t>(sol.rank), static_cast<std::size_t>(basis_.rank));
  const double r2 = orthogonal_part(b).squaredNorm();
  const double rs2 = (*sol.residual_norm) * (*sol.residual_norm);
  return std::sqrt(std::max(0.0, (rs2 - r2) / r2));
}

double LeastSquaresContext::optimality_coefficient_projection(const Vector& b, const SketchOperator& s) const {
  check_rows(b.size(), "optimality_coefficient_projection");
  require_outside_range(b);
  const Vector perp = orthogonal_part(b);
  Index sketched_rank = 0;
  const Vector proj = pinv_solve(s.apply(basis_.q), s.apply(perp), &sketched_rank, rank_tol_);
  if (sketched_rank != basis_.rank)
    throw RankDropError(static_cast<std::size_t>(sketched_rank), static_cast<std::size_t>(basis_.rank));
  return proj.norm() / perp.norm();
}

LeastSquaresSolution solve_full_ls(const Matrix& a, const Vector& b) {
  return LeastSquaresContext(a).solve_full(b);
}

LeastSquaresSolution solve_sketched_ls(const Matrix& a, const Vector& b, const SketchOperator& s) {
  return LeastSquaresContext(a).solve_sketched(b, s);
}

LeastSquaresSolution solve_sketched_ls(const Matrix& a, EntryOracle& b, const SketchOperator& s) {
  return LeastSquaresContext(a).solve_sketched(b, s);
}

ResidualDecomposition residual_decomposition(const Matrix& a, const Vector& b, const SketchOperator& s) {
  return LeastSquaresContext(a).residual_decomposition(b, s);
}

double optimality_coefficient(const Matrix& a, const Vector& b, const SketchOperator& s) {
  return LeastSquaresContext(a).optimality_coefficient(b, s);
}

}  // namespace bfb
