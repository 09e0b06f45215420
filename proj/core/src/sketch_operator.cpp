#include <algorithm>
#include <cmath>
#include <string>

#include "bfb/errors.hpp"
#include "bfb/sketch_operator.hpp"

namespace bfb {

std::string_view to_string(SketchKind kind) noexcept {
  switch (kind) {
    case SketchKind::gaussian: return "gaussian";
    case SketchKind::uniform: return "uniform";
    case SketchKind::leverage: return "leverage";
    case SketchKind::leveraged_volume: return "leveraged_volume";
    case SketchKind::cpqr: return "cpqr";
  }
  return "unknown";
}

SketchKind parse_sketch_kind(std::string_view name) {
  if (name == "gaussian") return SketchKind::gaussian;
  if (name == "uniform") return SketchKind::uniform;
  if (name == "leverage") return SketchKind::leverage;
  if (name == "leveraged_volume" || name == "leveraged-volume") return SketchKind::leveraged_volume;
  if (name == "cpqr") return SketchKind::cpqr;
  throw InvalidArgument("unknown sketch kind '" + std::string(name) + "'");
}

SketchOperator::SketchOperator(SketchSpec spec, Index n, RowSample rows)
    : spec_(spec), n_(n), form_(std::move(rows)) {
  const auto& r = std::get<RowSample>(form_);
  if (n_ < 1) throw InvalidArgument("sketch source dimension must be positive");
  if (r.indices.empty()) throw InvalidArgument("row sample must select at least one row");
  if (r.indices.size() != r.weights.size()) throw DimensionMismatch("row sample indices/weights length mismatch");
  for (std::size_t j = 0; j < r.indices.size(); ++j) {
    if (r.indices[j] < 0 || r.indices[j] >= n_) throw InvalidArgument("row sample index out of range");
    if (!std::isfinite(r.weights[j]) || r.weights[j] <= 0.0)
      throw InvalidArgument("row sample weights must be finite and positive");
  }
  spec_.m = static_cast<Index>(r.indices.size());
}

SketchOperator::SketchOperator(SketchSpec spec, Index n, DenseSketch dense)
    : spec_(spec), n_(n), form_(std::move(dense)) {
  const auto& d = std::get<DenseSketch>(form_);
  if (n_ < 1 || d.matrix.rows() < 1) throw InvalidArgument("dense sketch must be non-empty");
  if (d.matrix.cols() != n_) throw DimensionMismatch("dense sketch column count differs from n");
  if (!d.matrix.allFinite()) throw InvalidArgument("dense sketch entries must be finite");
  spec_.m = d.matrix.rows();
}

SketchOperator SketchOperator::identity(Index n) {
  RowSample rows;
  rows.indices.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) rows.indices[static_cast<std::size_t>(i)] = i;
  rows.weights.assign(static_cast<std::size_t>(n), 1.0);
  // A deterministic, exhaustive, unit-weight selection: the m = N case of CPQR sampling.
  return SketchOperator(SketchSpec{SketchKind::cpqr, n, 0}, n, std::move(rows));
}

Index SketchOperator::m() const noexcept { return spec_.m; }

const RowSample& SketchOperator::rows() const {
  if (!is_row_sample()) throw InvalidArgument("sketch is dense, not a row sample");
  return std::get<RowSample>(form_);
}

const Matrix& SketchOperator::dense() const {
  if (is_row_sample()) throw InvalidArgument("sketch is a row sample, not dense");
  return std::get<DenseSketch>(form_).matrix;
}

Matrix SketchOperator::apply(const Matrix& operand) const {
  if (operand.rows() != n_) throw DimensionMismatch("sketch applied to operand with wrong row count");
  if (!is_row_sample()) return dense() * operand;
  const auto& r = rows();
  Matrix out(static_cast<Index>(r.indices.size()), operand.cols());
  for (std::size_t j = 0; j < r.indices.size(); ++j)
    out.row(static_cast<Index>(j)) = r.weights[j] * operand.row(r.indices[j]);
  return out;
}

Vector SketchOperator::apply(const Vector& operand) const {
  if (operand.size() != n_) throw DimensionMismatch("sketch applied to vector with wrong length");
  if (!is_row_sample()) return dense() * operand;
  const auto& r = rows();
  Vector out(static_cast<Index>(r.indices.size()));
  for (std::size_t j = 0; j < r.indices.size(); ++j)
    out(static_cast<Index>(j)) = r.weights[j] * operand(r.indices[j]);
  return out;
}

Matrix SketchOperator::explicit_matrix() const {
  if (!is_row_sample()) return dense();
  const auto& r = rows();
  Matrix s = Matrix::Zero(static_cast<Index>(r.indices.size()), n_);
  for (std::size_t j = 0; j < r.indices.size(); ++j) s(static_cast<Index>(j), r.indices[j]) = r.weights[j];
  return s;
}

std::vector<Index> SketchOperator::distinct_rows() const {
  if (!is_row_sample()) return {};
  std::vector<Index> out = rows().indices;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bfb
