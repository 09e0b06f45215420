#pragma once

#include <optional>

#include "bfb/linalg.hpp"
#include "bfb/types.hpp"

namespace bfb {

struct CorrelationMetrics {
  double nu = 0.0;           // |<u, u~>| for the unit range-orthogonal parts u, u~ of b, b~
  double phi = 0.0;          // |<b, b~>| / (|b| |b~|)
  double kappa = 0.0;        // |P_Q b| / |b|
  double kappa_tilde = 0.0;  // |P_Q b~| / |b~|
  double sign = 1.0;         // sign of <u, u~>
  Vector h;                  // (u - sign u~) normalized; empty when degenerate
  bool degenerate = false;   // u = sign u~ to machine precision, h undefined
};

// Both b and b~ must lie outside range(A) (DegenerateDataError otherwise).
CorrelationMetrics correlation_metrics(const LeastSquaresContext& ctx, const Vector& b, const Vector& bt);
CorrelationMetrics correlation_metrics(const Matrix& a, const Vector& b, const Vector& bt);

// 2 sqrt(6 (1 - nu) eps).
double optimality_gap_bound(double nu, double eps);

// 24 L (1 - nu) + (delta/2)(1 + 4 sqrt(6 (1 - nu) eps)).
double tau(double eps, double delta, double nu, Index l);

struct PropCorBounds {
  double bound_nu = 0.0;        // phi - kappa min{1, sqrt(2(1 - phi + kappa))}
  double bound_nu_lowfi = 0.0;  // same with kappa -> phi kappa~ + sqrt(1 - phi^2)
};

// Requires phi >= kappa.
PropCorBounds prop_cor_bounds(double phi, double kappa, double kappa_tilde);

struct GaussianCorrBounds {
  double general = 0.0;
  // (1 - kappa^2) - sqrt(12 (1 - phi)) / (phi - kappa)^2, only when phi >= kappa
  // (-infinity at phi = kappa).
  std::optional<double> phi_kappa_form;
};

// Asymptotic lower bounds on corr(mu^2(b, S), mu^2(b~, S)) for Gaussian S.
GaussianCorrBounds gaussian_corr_bounds(const LeastSquaresContext& ctx, const Vector& b, const Vector& bt);
GaussianCorrBounds gaussian_corr_bounds(const Matrix& a, const Vector& b, const Vector& bt);

// |Ax - b| / |b|.
double relative_error(const Matrix& a, const Vector& x, const Vector& b);

}  // namespace bfb
