#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bfb/linalg.hpp"
#include "bfb/oracle.hpp"
#include "bfb/sketch_operator.hpp"

namespace bfb {

struct BoostResult {
  Index selected = 0;                     // l*
  SketchSpec selected_spec;
  Vector x_bfb;
  std::vector<double> low_fid_residuals;  // |A x_l - b~| for every sketch
  Index high_fid_queries = 0;             // distinct high-fidelity entries requested by the final solve
  std::optional<double> solution_residual;  // |A x_bfb - b|, when b is attached to the oracle
  bool sketched_rank_ok = true;           // rank(S_l* A) == rank(A)
};

// Bi-fidelity boosting: solve the low-fidelity problem under every sketch, keep
// the sketch with the smallest full low-fidelity residual (first on ties), and
// solve the high-fidelity problem once with it, querying only its sampled rows.
BoostResult run_bfb(const LeastSquaresContext& ctx, FidelityPair& pair, std::span<const SketchOperator> sketches);
BoostResult run_bfb(const Matrix& a, FidelityPair& pair, std::span<const SketchOperator> sketches);

// |A x_l - b| for the b-sketched solution of every sketch.
std::vector<double> oracle_residuals(const LeastSquaresContext& ctx, const Vector& b,
                                     std::span<const SketchOperator> sketches);

// l** = argmin of oracle_residuals, first on ties.
Index oracle_index(const LeastSquaresContext& ctx, const Vector& b, std::span<const SketchOperator> sketches);
Index oracle_index(const Matrix& a, const Vector& b, std::span<const SketchOperator> sketches);

// Smallest index attaining the minimum.
Index argmin_first(std::span<const double> values);

std::string to_json(const BoostResult& result);

}  // namespace bfb
