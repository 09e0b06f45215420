#include "bfb/boost.hpp"

#include <json.hpp>

#include "bfb/errors.hpp"

namespace bfb {

Index argmin_first(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("argmin of an empty sequence");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[best]) best = i;
  return static_cast<Index>(best);
}

namespace {

void check_sketches(const LeastSquaresContext& ctx, std::span<const SketchOperator> sketches) {
  if (sketches.empty()) throw InvalidArgument("at least one sketch is required");
  for (const auto& s : sketches)
    if (s.n() != ctx.rows()) throw DimensionMismatch("sketch column count differs from the row count of A");
}

}  // namespace

BoostResult run_bfb(const LeastSquaresContext& ctx, FidelityPair& pair, std::span<const SketchOperator> sketches) {
  check_sketches(ctx, sketches);
  if (pair.low.size() != ctx.rows() || pair.high.size() != ctx.rows())
    throw DimensionMismatch("fidelity vectors must have one entry per row of A");
  if (!pair.high.has_full())
    for (const auto& s : sketches)
      if (!s.is_row_sample()) throw FullVectorRequired();

  BoostResult out;
  out.low_fid_residuals.reserve(sketches.size());
  for (const auto& s : sketches) {
    const LeastSquaresSolution low = ctx.solve_sketched(pair.low, s);
    out.low_fid_residuals.push_back(ctx.residual(low.x, pair.low));
  }
  out.selected = argmin_first(out.low_fid_residuals);
  const SketchOperator& chosen = sketches[static_cast<std::size_t>(out.selected)];
  out.selected_spec = chosen.spec();

  const Index before = pair.high.queries();
  LeastSquaresSolution high = ctx.solve_sketched(pair.high, chosen);
  out.high_fid_queries = pair.high.queries() - before;
  out.x_bfb = std::move(high.x);
  out.sketched_rank_ok = high.sketched_rank_ok;
  if (pair.high.has_full()) out.solution_residual = ctx.residual(out.x_bfb, pair.high.full());
  return out;
}

BoostResult run_bfb(const Matrix& a, FidelityPair& pair, std::span<const SketchOperator> sketches) {
  return run_bfb(LeastSquaresContext(a), pair, sketches);
}

std::vector<double> oracle_residuals(const LeastSquaresContext& ctx, const Vector& b,
                                     std::span<const SketchOperator> sketches) {
  check_sketches(ctx, sketches);
  std::vector<double> out;
  out.reserve(sketches.size());
  for (const auto& s : sketches) out.push_back(ctx.residual(ctx.solve_sketched(b, s).x, b));
  return out;
}

Index oracle_index(const LeastSquaresContext& ctx, const Vector& b, std::span<const SketchOperator> sketches) {
  return argmin_first(oracle_residuals(ctx, b, sketches));
}

Index oracle_index(const Matrix& a, const Vector& b, std::span<const SketchOperator> sketches) {
  return oracle_index(LeastSquaresContext(a), b, sketches);
}

std::string to_json(const BoostResult& r) {
  nlohmann::ordered_json j;
  j["selected"] = r.selected;
  j["selected_sketch"] = {{"kind", to_string(r.selected_spec.kind)},
                          {"m", r.selected_spec.m},
                          {"seed", r.selected_spec.seed}};
  j["low_fid_residuals"] = r.low_fid_residuals;
  j["high_fid_queries"] = r.high_fid_queries;
  j["x_bfb"] = std::vector<double>(r.x_bfb.data(), r.x_bfb.data() + r.x_bfb.size());
  if (r.solution_residual) j["solution_residual"] = *r.solution_residual;
  else j["solution_residual"] = nullptr;
  j["sketched_rank_ok"] = r.sketched_rank_ok;
  return j.dump();
}

}  // namespace bfb
