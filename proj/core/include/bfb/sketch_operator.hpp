#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "bfb/types.hpp"

namespace bfb {

enum class SketchKind { gaussian, uniform, leverage, leveraged_volume, cpqr };

std::string_view to_string(SketchKind kind) noexcept;
// Throws InvalidArgument on an unknown name. Accepts "leveraged-volume" as an alias.
SketchKind parse_sketch_kind(std::string_view name);

struct SketchSpec {
  SketchKind kind = SketchKind::leverage;
  Index m = 1;  // embedding dimension
  std::uint64_t seed = 0;
};

// Weighted row selection: row j of S has a single nonzero, weights[j], in column indices[j].
struct RowSample {
  std::vector<Index> indices;
  std::vector<double> weights;
};

struct DenseSketch {
  Matrix matrix;  // m x n
};

// Immutable sketch S in R^{m x n}, stored either as a row sample or densely.
class SketchOperator {
 public:
  SketchOperator(SketchSpec spec, Index n, RowSample rows);
  SketchOperator(SketchSpec spec, Index n, DenseSketch dense);

  // All n rows in order with unit weights.
  static SketchOperator identity(Index n);

  const SketchSpec& spec() const noexcept { return spec_; }
  Index n() const noexcept { return n_; }
  Index m() const noexcept;

  bool is_row_sample() const noexcept { return std::holds_alternative<RowSample>(form_); }
  const RowSample& rows() const;   // throws InvalidArgument for dense operators
  const Matrix& dense() const;     // throws InvalidArgument for row samples

  Matrix apply(const Matrix& operand) const;
  Vector apply(const Vector& operand) const;
  Matrix explicit_matrix() const;

  // Sorted distinct sampled rows; empty for dense operators.
  std::vector<Index> distinct_rows() const;

 private:
  SketchSpec spec_;
  Index n_;
  std::variant<RowSample, DenseSketch> form_;
};

}  // namespace bfb
