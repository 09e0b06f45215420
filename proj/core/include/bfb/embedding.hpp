#pragma once

#include <optional>

#include "bfb/sketch_operator.hpp"
#include "bfb/types.hpp"

namespace bfb {

// psi_2 (sub-Gaussian) norm of a standard normal variable, sqrt(8/3).
inline constexpr double kGaussianSubgaussianNorm = 1.6329931618554521;

struct EmbeddingParams {
  Index d = 1;
  Index l = 1;        // number of sketches L
  double eps = 0.5;
  double delta = 0.1;
  double k_subgauss = kGaussianSubgaussianNorm;  // K, Gaussian sketches only
  double c_subgauss = 1.0;                       // C, Gaussian sketches only
  std::optional<double> c_lev;                   // leverage sketches with a coherence-type constant
};

// Smallest m the (eps, delta) pair condition guarantees for L sketches:
//   gaussian:            C K^4 (d/eps) log(4dL/delta)
//   leverage:            max{35 d log(4dL/delta), 2dL/(eps delta)}
//   leverage with c_lev: max{35, 4 c_lev^2/eps} d log(4dL/delta)
// rounded up. Only gaussian and leverage kinds are accepted.
Index min_embedding_dim(SketchKind kind, const EmbeddingParams& params);

}  // namespace bfb
