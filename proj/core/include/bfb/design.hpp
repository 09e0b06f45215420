#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bfb/discrete.hpp"
#include "bfb/quadrature.hpp"
#include "bfb/sketch_operator.hpp"
#include "bfb/types.hpp"

namespace bfb {

enum class SpaceKind { total_degree, hyperbolic_cross };

std::string_view to_string(SpaceKind kind) noexcept;
// Accepts "total_degree"/"td" and "hyperbolic_cross"/"hc" (dashes allowed).
SpaceKind parse_space_kind(std::string_view name);

using MultiIndex = std::vector<Index>;

struct IndexSet {
  Index q = 1;
  Index zeta = 0;
  SpaceKind kind = SpaceKind::total_degree;
  std::vector<MultiIndex> indices;  // ascending Kronecker column index

  Index size() const noexcept { return static_cast<Index>(indices.size()); }
};

IndexSet index_set(Index q, Index zeta, SpaceKind kind);

// Flattened column of `j` in the full tensor basis with (zeta+1)^q columns; dimension 1 varies slowest.
Index kronecker_column(const MultiIndex& j, Index zeta);

inline constexpr Index kDefaultMemoryCap = 100'000'000;

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

struct DesignOptions {
  Index memory_cap = kDefaultMemoryCap;  // maximum N*d entries of the assembled matrix
  std::vector<Interval> domains;         // per-dimension parameter ranges; empty means [-1, 1]^q
};

// Tensor Gauss-Legendre design A(n, j) = sqrt(w_n) psi_j(p_n) with Kronecker
// factors A_k(n_k, j_k) = sqrt(w_{k,n_k}) psi_{j_k}(p_{k,n_k}). Rows follow the
// tensor grid with dimension 1 slowest. The dense matrix is built on first use.
class StructuredDesign {
 public:
  StructuredDesign(std::vector<Index> per_dim_nodes, IndexSet iset, DesignOptions options = {});

  Index q() const noexcept { return iset_.q; }
  Index rows() const noexcept { return n_; }
  Index cols() const noexcept { return iset_.size(); }
  const IndexSet& index_set() const noexcept { return iset_; }
  const std::vector<Index>& nodes_per_dim() const noexcept { return nodes_per_dim_; }
  const std::vector<QuadratureRule1D>& rules() const noexcept { return rules_; }
  const std::vector<Matrix>& factors() const noexcept { return factors_; }
  const std::vector<Index>& column_map() const noexcept { return column_map_; }
  const DesignOptions& options() const noexcept { return options_; }

  // Per-dimension grid position of row n.
  MultiIndex row_multi_index(Index n) const;
  // Parameter point of row n, mapped into the configured domains.
  std::vector<double> point(Index n) const;
  double sqrt_weight(Index n) const;

  // Throws MemoryCapExceeded when N*d exceeds the cap.
  const Matrix& assembled() const;
  bool is_assembled() const noexcept;

 private:
  struct Cache;

  std::vector<Index> nodes_per_dim_;
  IndexSet iset_;
  DesignOptions options_;
  Index n_ = 1;
  std::vector<QuadratureRule1D> rules_;
  std::vector<Matrix> factors_;
  std::vector<Index> column_map_;
  std::shared_ptr<Cache> cache_;
};

StructuredDesign build_design(std::vector<Index> per_dim_nodes, IndexSet iset, DesignOptions options = {});

using ParameterFunction = std::function<double(std::span<const double>)>;

// b(n) = sqrt(w_n) f(p_n) in the design's row order.
Vector assemble_data_vector(const StructuredDesign& design, const ParameterFunction& f);

// Exact leverage-score row sampling for a tensor design without forming it:
// pick a column of v uniformly, then each grid coordinate r_k from the squared
// entries of that column of the factor basis Q_k. Setup is O(sum_k N_k (zeta+1)^2);
// each draw costs O(q) plus O(q d) for its weight, independent of N.
class KronLeverageSampler {
 public:
  explicit KronLeverageSampler(const StructuredDesign& design);

  // m i.i.d. rows with weights 1/sqrt(m l_i / d); reported as a leverage sketch.
  SketchOperator sample(Index m, std::uint64_t seed) const;
  // Row index only, for callers measuring raw draw cost.
  Index draw(CounterRng& rng) const;
  // Leverage score of row i of the assembled matrix, from the factor bases.
  double leverage(Index i) const;
  Index rows() const noexcept { return n_; }

 private:
  Index q_;
  Index n_;
  std::vector<Index> nodes_per_dim_;
  std::vector<MultiIndex> columns_;
  std::vector<Eigen::MatrixXd> bases_;
  std::vector<std::vector<AliasTable>> tables_;  // [k][j_k]
};

SketchOperator kron_leverage_sample(const StructuredDesign& design, Index m, std::uint64_t seed);

// p_i = |Q(i,:)|^2 / d from the assembled matrix (reference distribution).
Vector exact_row_distribution(const StructuredDesign& design);

// Index set and grid metadata as a JSON object.
std::string design_to_json(const StructuredDesign& design);

}  // namespace bfb
