#include "bfb/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bfb/errors.hpp"

namespace bfb {

namespace {

Index ceil_count(double value) {
  if (!std::isfinite(value) || value > static_cast<double>(std::numeric_limits<Index>::max()))
    throw InvalidArgument("embedding dimension overflows");
  return std::max<Index>(1, static_cast<Index>(std::ceil(value)));
}

}  // namespace

Index min_embedding_dim(SketchKind kind, const EmbeddingParams& p) {
  if (p.d < 1 || p.l < 1) throw InvalidArgument("min_embedding_dim: d and L must be at least 1");
  if (!(p.eps > 0.0) || !(p.delta > 0.0) || !(p.delta < 1.0))
    throw InvalidArgument("min_embedding_dim: need eps > 0 and 0 < delta < 1");
  const double d = static_cast<double>(p.d);
  const double l = static_cast<double>(p.l);
  const double log_term = std::log(4.0 * d * l / p.delta);

  switch (kind) {
    case SketchKind::gaussian: {
      if (!(p.k_subgauss > 0.0) || !(p.c_subgauss > 0.0))
        throw InvalidArgument("min_embedding_dim: K and C must be positive");
      const double k4 = std::pow(p.k_subgauss, 4);
      return ceil_count(p.c_subgauss * k4 * (d / p.eps) * log_term);
    }
    case SketchKind::leverage: {
      if (!(p.eps < 0.5) || !(p.delta < 0.5))
        throw InvalidArgument("min_embedding_dim: leverage bounds need eps, delta in (0, 1/2)");
      if (p.c_lev) {
        if (!(*p.c_lev > 0.0)) throw InvalidArgument("min_embedding_dim: c_lev must be positive");
        const double coef = std::max(35.0, 4.0 * *p.c_lev * *p.c_lev / p.eps);
        return ceil_count(coef * d * log_term);
      }
      return ceil_count(std::max(35.0 * d * log_term, 2.0 * d * l / (p.eps * p.delta)));
    }
    default:
      throw InvalidArgument("min_embedding_dim: no bound for sketch kind '" + std::string(to_string(kind)) + "'");
  }
}

}  // namespace bfb
