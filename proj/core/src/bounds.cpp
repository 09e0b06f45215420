#include "bfb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bfb/errors.hpp"

namespace bfb {

namespace {

constexpr double kDegenerateTol = 1e-10;

void require_outside(const Vector& v, const Vector& perp, const char* name) {
  const double nv = v.norm();
  if (!(nv > 0.0) || perp.norm() <= kOptTol * nv)
    throw DegenerateDataError(std::string(name) + " lies in range(A); residual-based quantities are undefined");
}

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

CorrelationMetrics correlation_metrics(const LeastSquaresContext& ctx, const Vector& b, const Vector& bt) {
  if (b.size() != ctx.rows() || bt.size() != ctx.rows())
    throw DimensionMismatch("correlation_metrics: vector length differs from row count");
  const Vector ub = ctx.orthogonal_part(b);
  const Vector ut = ctx.orthogonal_part(bt);
  require_outside(b, ub, "b");
  require_outside(bt, ut, "b~");

  CorrelationMetrics out;
  const double nb = b.norm();
  const double nt = bt.norm();
  out.phi = std::min(1.0, std::abs(b.dot(bt)) / (nb * nt));
  out.kappa = std::min(1.0, (b - ub).norm() / nb);
  out.kappa_tilde = std::min(1.0, (bt - ut).norm() / nt);

  const Vector u = ub / ub.norm();
  const Vector v = ut / ut.norm();
  const double c = u.dot(v);
  out.nu = std::min(1.0, std::abs(c));
  out.sign = c < 0.0 ? -1.0 : 1.0;
  Vector diff = u - out.sign * v;
  const double nd = diff.norm();
  if (nd <= kDegenerateTol) {
    out.degenerate = true;
    out.nu = 1.0;
  } else {
    // Remove the rounding-level range component before normalizing.
    diff = ctx.orthogonal_part(diff);
    out.h = diff / diff.norm();
  }
  return out;
}

CorrelationMetrics correlation_metrics(const Matrix& a, const Vector& b, const Vector& bt) {
  return correlation_metrics(LeastSquaresContext(a), b, bt);
}

double optimality_gap_bound(double nu, double eps) {
  require_unit_interval(nu, "nu");
  if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
  return 2.0 * std::sqrt(6.0 * (1.0 - nu) * eps);
}

double tau(double eps, double delta, double nu, Index l) {
  if (!(eps > 0.0 && eps < 0.5)) throw InvalidArgument("eps must lie in (0, 1/2)");
  if (!(delta > 0.0 && delta < 0.5)) throw InvalidArgument("delta must lie in (0, 1/2)");
  require_unit_interval(nu, "nu");
  if (l < 1) throw InvalidArgument("L must be at least 1");
  return 24.0 * static_cast<double>(l) * (1.0 - nu) + 0.5 * delta * (1.0 + 4.0 * std::sqrt(6.0 * (1.0 - nu) * eps));
}

namespace {

double nu_lower_bound(double phi, double k) {
  return phi - k * std::min(1.0, std::sqrt(std::max(0.0, 2.0 * (1.0 - phi + k))));
}

}  // namespace

PropCorBounds prop_cor_bounds(double phi, double kappa, double kappa_tilde) {
  require_unit_interval(phi, "phi");
  require_unit_interval(kappa, "kappa");
  require_unit_interval(kappa_tilde, "kappa_tilde");
  if (phi < kappa) throw InvalidArgument("prop_cor_bounds requires phi >= kappa");
  PropCorBounds out;
  out.bound_nu = nu_lower_bound(phi, kappa);
  out.bound_nu_lowfi = nu_lower_bound(phi, phi * kappa_tilde + std::sqrt(std::max(0.0, 1.0 - phi * phi)));
  return out;
}

GaussianCorrBounds gaussian_corr_bounds(const LeastSquaresContext& ctx, const Vector& b, const Vector& bt) {
  if (b.size() != ctx.rows() || bt.size() != ctx.rows())
    throw DimensionMismatch("gaussian_corr_bounds: vector length differs from row count");
  const Vector bp = b / b.norm();
  const Vector tp = bt / bt.norm();
  const Vector ub = ctx.orthogonal_part(bp);
  const Vector ut = ctx.orthogonal_part(tp);
  require_outside(bp, ub, "b");
  require_outside(tp, ut, "b~");

  GaussianCorrBounds out;
  const double cross = std::min((ub + ut).norm(), (ub - ut).norm());
  out.general = (ub.squaredNorm() - std::sqrt(6.0) * cross) / ut.squaredNorm();

  const double phi = std::min(1.0, std::abs(bp.dot(tp)));
  const double kappa = std::min(1.0, (bp - ub).norm());
  if (phi >= kappa) {
    const double gap = phi - kappa;
    out.phi_kappa_form = gap > 0.0 ? (1.0 - kappa * kappa) - std::sqrt(12.0 * (1.0 - phi)) / (gap * gap)
                                   : -std::numeric_limits<double>::infinity();
  }
  return out;
}

GaussianCorrBounds gaussian_corr_bounds(const Matrix& a, const Vector& b, const Vector& bt) {
  return gaussian_corr_bounds(LeastSquaresContext(a), b, bt);
}

double relative_error(const Matrix& a, const Vector& x, const Vector& b) {
  if (a.rows() != b.size() || a.cols() != x.size()) throw DimensionMismatch("relative_error: size mismatch");
  const double nb = b.norm();
  if (!(nb > 0.0)) throw InvalidArgument("relative_error: b must be nonzero");
  return (a * x - b).norm() / nb;
}

}  // namespace bfb
