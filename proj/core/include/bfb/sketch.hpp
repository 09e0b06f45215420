#pragma once

#include <string>
#include <string_view>

#include "bfb/linalg.hpp"
#include "bfb/sketch_operator.hpp"

namespace bfb {

struct LeverageProfile {
  Vector scores;           // l_i = |U(i,:)|^2
  double coherence = 0.0;  // max_i l_i
  Index rank = 0;          // sum_i l_i
};

LeverageProfile leverage_profile(const Matrix& a);
LeverageProfile leverage_profile(const OrthoBasis& basis);

// Dense m x n operator with i.i.d. N(0, 1/m) entries drawn row-major from spec.seed.
SketchOperator gaussian_sketch(Index n, const SketchSpec& spec);

// m i.i.d. uniform rows, each weighted sqrt(n/m) so that E[S^T S] = I.
SketchOperator uniform_sketch(Index n, const SketchSpec& spec);

// m i.i.d. rows drawn with p_i = l_i / sum(l), weighted 1/sqrt(m p_i).
SketchOperator leverage_sketch(const LeverageProfile& profile, const SketchSpec& spec);

// Deterministic rounds of column-pivoted QR on the transpose of the rows not yet
// chosen; each round keeps the top min(d, remaining) pivots. Unit weights.
SketchOperator cpqr_sketch(const Matrix& a, Index m);

struct VolumeOptions {
  Index pool_size = 0;          // 0 selects max(4 d^2, m)
  int max_retries = 16;         // fresh streams tried after a numerical breakdown
  int max_rejections = 100000;  // cap on determinantal rejection rounds per attempt
};

// Leveraged volume sampling: an i.i.d. leverage-score pool accepted by
// determinantal rejection, then reverse iterative volume sampling down to m
// rows. Weights 1/sqrt(m q_i) make E[(SA)^+ S b] = A^+ b.
SketchOperator leveraged_volume_sketch(const Matrix& a, const SketchSpec& spec, const VolumeOptions& options = {});
SketchOperator leveraged_volume_sketch(const OrthoBasis& basis, const SketchSpec& spec,
                                       const VolumeOptions& options = {});

Matrix apply_sketch(const SketchOperator& s, const Matrix& operand);
Vector apply_sketch(const SketchOperator& s, const Vector& operand);

struct PairConditionReport {
  bool sigma_ok = false;  // sigma_min^2(SQ) >= sqrt(2)/2
  bool cross_ok = false;  // |Q^T S^T S h|^2 <= eps/2
  double sigma_min_sq = 0.0;
  double cross_norm_sq = 0.0;

  bool holds() const noexcept { return sigma_ok && cross_ok; }
};

// h must be a unit vector orthogonal to range(q).
PairConditionReport pair_condition_check(const SketchOperator& s, const OrthoBasis& q, const Vector& h, double eps);

// Builds any sketch kind for one design, sharing its basis and leverage profile.
class SketchFactory {
 public:
  SketchFactory(const Matrix& a, const OrthoBasis& basis, VolumeOptions volume = {});

  SketchOperator make(const SketchSpec& spec) const;
  const LeverageProfile& profile() const noexcept { return profile_; }

 private:
  const Matrix* a_;
  const OrthoBasis* basis_;
  LeverageProfile profile_;
  VolumeOptions volume_;
};

// {kind, m, seed, n, indices?, weights?}; dense Gaussian operators carry no
// entries and are regenerated from (n, spec) when read back.
std::string to_json(const SketchOperator& s);
SketchOperator sketch_from_json(std::string_view json);

}  // namespace bfb
