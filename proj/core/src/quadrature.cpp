#include "bfb/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "bfb/errors.hpp"

namespace bfb {

namespace {

struct LegendreValue {
  double p;   // P_n(x)
  double dp;  // P_n'(x)
};

LegendreValue legendre_with_derivative(Index n, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (Index k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
    p0 = p1;
    p1 = p2;
  }
  const double nd = static_cast<double>(n);
  return {p1, nd * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule1D gauss_legendre_rule(Index n) {
  if (n < 1) throw InvalidArgument("gauss_legendre_rule: n must be at least 1");
  const auto count = static_cast<std::size_t>(n);
  QuadratureRule1D rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const double nd = static_cast<double>(n);
  const Index half = (n + 1) / 2;
  for (Index i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    LegendreValue v{};
    for (int it = 0; it < 100; ++it) {
      v = legendre_with_derivative(n, x);
      const double step = v.p / v.dp;
      x -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    v = legendre_with_derivative(n, x);
    const double w = 1.0 / ((1.0 - x * x) * v.dp * v.dp);  // classical 2/(...) halved
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = count - 1 - lo;
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[count / 2] = 0.0;
  return rule;
}

std::vector<double> normalized_legendre_all(Index degree, double p) {
  if (degree < 0) throw InvalidArgument("normalized_legendre: negative degree");
  std::vector<double> out(static_cast<std::size_t>(degree) + 1);
  double p0 = 1.0;
  double p1 = p;
  out[0] = 1.0;
  if (degree >= 1) out[1] = std::sqrt(3.0) * p;
  for (Index k = 2; k <= degree; ++k) {
    const double kd = static_cast<double>(k);
    const double p2 = ((2.0 * kd - 1.0) * p * p1 - (kd - 1.0) * p0) / kd;
    p0 = p1;
    p1 = p2;
    out[static_cast<std::size_t>(k)] = std::sqrt(2.0 * kd + 1.0) * p2;
  }
  return out;
}

double normalized_legendre(Index j, double p) { return normalized_legendre_all(j, p).back(); }

}  // namespace bfb
