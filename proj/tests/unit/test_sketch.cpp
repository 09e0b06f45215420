#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "bfb/discrete.hpp"
#include "bfb/embedding.hpp"
#include "bfb/errors.hpp"
#include "bfb/linalg.hpp"
#include "bfb/rng.hpp"
#include "bfb/sketch.hpp"
#include "test_util.hpp"

namespace bfb {
namespace {

using test::random_matrix;
using test::random_vector;

double chi2_uniform(const std::vector<Index>& counts, double total) {
  const double expected = total / static_cast<double>(counts.size());
  double chi2 = 0.0;
  for (Index c : counts) chi2 += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  return chi2;
}

TEST(CounterRng, DeterministicAndStreamsDiffer) {
  CounterRng a(5), b(5), c(stream_seed(5, 1));
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a(), b());
  CounterRng d(5);
  EXPECT_NE(d(), c());
  EXPECT_NE(stream_seed(5, 1), stream_seed(5, 2));
}

TEST(CounterRng, NormalMoments) {
  CounterRng rng(17);
  const int n = 200000;
  double s1 = 0, s2 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    s1 += x;
    s2 += x * x;
    s4 += x * x * x * x;
  }
  EXPECT_NEAR(s1 / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
  EXPECT_NEAR(s4 / n, 3.0, 0.06);
}

TEST(CounterRng, BelowIsUniform) {
  CounterRng rng(3);
  std::vector<Index> counts(7, 0);
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) ++counts[rng.below(7)];
  EXPECT_LT(chi2_uniform(counts, draws), test::chi2_quantile_99(6));
}

TEST(AliasTable, MatchesTargetLaw) {
  const std::vector<double> w{1, 0, 3, 6};
  const AliasTable t(w);
  CounterRng rng(9);
  std::vector<Index> counts(4, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[static_cast<std::size_t>(t.draw(rng))];
  EXPECT_EQ(counts[1], 0);
  double chi2 = 0.0;
  for (std::size_t i : {0u, 2u, 3u}) {
    const double e = draws * t.probability(static_cast<Index>(i));
    chi2 += (counts[i] - e) * (counts[i] - e) / e;
  }
  EXPECT_LT(chi2, test::chi2_quantile_99(2));
  EXPECT_DOUBLE_EQ(t.probability(3), 0.6);
}

TEST(AliasTable, RejectsBadWeights) {
  EXPECT_THROW(AliasTable(std::vector<double>{}), InvalidArgument);
  EXPECT_THROW(AliasTable(std::vector<double>{0, 0}), InvalidArgument);
  EXPECT_THROW(AliasTable(std::vector<double>{1, -1}), InvalidArgument);
}

TEST(LeverageProfile, OrthonormalSquare) {
  const LeverageProfile p = leverage_profile(Matrix::Identity(3, 3));
  for (Index i = 0; i < 3; ++i) EXPECT_NEAR(p.scores(i), 1.0, 1e-14);
  EXPECT_NEAR(p.coherence, 1.0, 1e-14);
}

TEST(LeverageProfile, SymmetricColumn) {
  Matrix a(2, 1);
  a << 1, 1;
  const LeverageProfile p = leverage_profile(a);
  EXPECT_NEAR(p.scores(0), 0.5, 1e-15);
  EXPECT_NEAR(p.scores(1), 0.5, 1e-15);
  EXPECT_NEAR(p.coherence, 0.5, 1e-15);
}

TEST(LeverageProfile, BasisIndependent) {
  const Matrix a = random_matrix(20, 4, 12);
  const LeverageProfile p = leverage_profile(a);
  const Eigen::MatrixXd q = test::range_basis(a);
  const Eigen::VectorXd qr_scores = q.rowwise().squaredNorm();
  EXPECT_LE((p.scores - qr_scores).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(p.scores.sum(), 4.0, 1e-8);
  EXPECT_EQ(p.rank, 4);
  EXPECT_GE(p.coherence, 4.0 / 20.0);
  EXPECT_LE(p.coherence, 1.0 + 1e-12);
  EXPECT_GE(p.scores.minCoeff(), 0.0);
}

TEST(LeverageProfile, ZeroMatrixThrows) { EXPECT_THROW(leverage_profile(Matrix::Zero(5, 2)), ZeroRankError); }

TEST(GaussianSketch, Deterministic) {
  const SketchSpec spec{SketchKind::gaussian, 7, 99};
  const SketchOperator s1 = gaussian_sketch(13, spec);
  const SketchOperator s2 = gaussian_sketch(13, spec);
  EXPECT_TRUE((s1.dense().array() == s2.dense().array()).all());
  EXPECT_FALSE(s1.is_row_sample());
  const SketchOperator s3 = gaussian_sketch(13, {SketchKind::gaussian, 7, 100});
  EXPECT_FALSE((s1.dense().array() == s3.dense().array()).all());
}

TEST(GaussianSketch, EntryVarianceIsOneOverM) {
  const Index m = 10000;
  const SketchOperator s = gaussian_sketch(5, {SketchKind::gaussian, m, 4});
  for (Index j = 0; j < 5; ++j) {
    const Eigen::VectorXd col = s.dense().col(j);
    const double mean = col.mean();
    const double var = (col.array() - mean).square().sum() / static_cast<double>(m - 1);
    EXPECT_NEAR(var * m, 1.0, 0.05);
  }
}

TEST(GaussianSketch, Isotropy) {
  const Vector x = random_vector(30, 8);
  double acc = 0.0;
  const int draws = 2000;
  for (int t = 0; t < draws; ++t)
    acc += gaussian_sketch(30, {SketchKind::gaussian, 10, static_cast<std::uint64_t>(t)}).apply(x).squaredNorm();
  EXPECT_NEAR(acc / draws / x.squaredNorm(), 1.0, 0.05);
}

TEST(GaussianSketch, RejectsWrongKind) {
  EXPECT_THROW(gaussian_sketch(5, {SketchKind::uniform, 3, 0}), InvalidArgument);
}

TEST(UniformSketch, SingleRow) {
  const SketchOperator s = uniform_sketch(1, {SketchKind::uniform, 6, 1});
  for (Index i : s.rows().indices) EXPECT_EQ(i, 0);
}

TEST(UniformSketch, WeightsAndGoodnessOfFit) {
  const Index n = 20, m = 100000;
  const SketchOperator s = uniform_sketch(n, {SketchKind::uniform, m, 2});
  std::vector<Index> counts(static_cast<std::size_t>(n), 0);
  for (Index i : s.rows().indices) ++counts[static_cast<std::size_t>(i)];
  EXPECT_LT(chi2_uniform(counts, static_cast<double>(m)), test::chi2_quantile_99(static_cast<double>(n - 1)));
  for (double w : s.rows().weights) EXPECT_DOUBLE_EQ(w, std::sqrt(static_cast<double>(n) / m));
}

TEST(LeverageSketch, PointMass) {
  LeverageProfile p;
  p.scores = Vector::Zero(3);
  p.scores(0) = 1.0;
  p.coherence = 1.0;
  p.rank = 1;
  const SketchOperator s = leverage_sketch(p, {SketchKind::leverage, 9, 4});
  for (std::size_t j = 0; j < 9; ++j) {
    EXPECT_EQ(s.rows().indices[j], 0);
    EXPECT_DOUBLE_EQ(s.rows().weights[j], 1.0 / 3.0);
  }
}

TEST(LeverageSketch, EqualScoresGiveUniformDraws) {
  Matrix a(4, 2);
  a << 1, 0, 0, 1, 1, 0, 0, 1;  // I_2 stacked on I_2
  const SketchOperator s = leverage_sketch(leverage_profile(a), {SketchKind::leverage, 100000, 5});
  std::vector<Index> counts(4, 0);
  for (Index i : s.rows().indices) ++counts[static_cast<std::size_t>(i)];
  EXPECT_LT(chi2_uniform(counts, 100000.0), test::chi2_quantile_99(3));
}

TEST(LeverageSketch, WeightsFollowScores) {
  const Matrix a = random_matrix(40, 3, 6);
  const LeverageProfile p = leverage_profile(a);
  const SketchOperator s = leverage_sketch(p, {SketchKind::leverage, 25, 7});
  for (std::size_t j = 0; j < 25; ++j) {
    const double prob = p.scores(s.rows().indices[j]) / p.scores.sum();
    EXPECT_NEAR(s.rows().weights[j], 1.0 / std::sqrt(25 * prob), 1e-12);
  }
}

TEST(LeverageSketch, ZeroScoresThrow) {
  LeverageProfile p;
  p.scores = Vector::Zero(3);
  EXPECT_THROW(leverage_sketch(p, {SketchKind::leverage, 2, 0}), InvalidArgument);
}

template <class Make>
void expect_unbiased_gram(Index n, int draws, Make make) {
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  for (int t = 0; t < draws; ++t) {
    const Eigen::MatrixXd s = make(static_cast<std::uint64_t>(t)).explicit_matrix();
    acc += s.transpose() * s;
  }
  acc /= draws;
  EXPECT_LE((acc - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 0.05);
}

TEST(LeverageSketch, UnbiasedGram) {
  const Matrix a = random_matrix(20, 10, 8);
  const LeverageProfile p = leverage_profile(a);
  expect_unbiased_gram(20, 5000, [&](std::uint64_t seed) { return leverage_sketch(p, {SketchKind::leverage, 100, seed}); });
}

TEST(UniformSketch, UnbiasedGram) {
  expect_unbiased_gram(20, 5000, [](std::uint64_t seed) { return uniform_sketch(20, {SketchKind::uniform, 100, seed}); });
}

TEST(CpqrSketch, ExhaustiveAtFullSize) {
  const Matrix a = random_matrix(12, 3, 9);
  const SketchOperator s = cpqr_sketch(a, 12);
  std::vector<Index> idx = s.rows().indices;
  std::sort(idx.begin(), idx.end());
  for (Index i = 0; i < 12; ++i) EXPECT_EQ(idx[static_cast<std::size_t>(i)], i);
  for (double w : s.rows().weights) EXPECT_EQ(w, 1.0);
}

TEST(CpqrSketch, SmallMTakesLeadingPivotsOfOneFactorization) {
  const Matrix a = random_matrix(15, 4, 10);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr{Eigen::MatrixXd(a.transpose())};
  const auto& perm = qr.colsPermutation().indices();
  for (Index m = 1; m <= 4; ++m) {
    const SketchOperator s = cpqr_sketch(a, m);
    for (Index j = 0; j < m; ++j) EXPECT_EQ(s.rows().indices[static_cast<std::size_t>(j)], perm(j));
  }
}

TEST(CpqrSketch, SecondRoundPivotsRemainingRows) {
  const Matrix a = random_matrix(15, 4, 11);
  const SketchOperator s = cpqr_sketch(a, 6);
  std::vector<Index> first(s.rows().indices.begin(), s.rows().indices.begin() + 4);
  std::vector<Index> rest;
  for (Index i = 0; i < 15; ++i)
    if (std::find(first.begin(), first.end(), i) == first.end()) rest.push_back(i);
  Eigen::MatrixXd at(4, static_cast<Index>(rest.size()));
  for (std::size_t c = 0; c < rest.size(); ++c) at.col(static_cast<Index>(c)) = a.row(rest[c]).transpose();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(at);
  EXPECT_EQ(s.rows().indices[4], rest[static_cast<std::size_t>(qr.colsPermutation().indices()(0))]);
  EXPECT_EQ(s.rows().indices[5], rest[static_cast<std::size_t>(qr.colsPermutation().indices()(1))]);
  EXPECT_EQ(s.distinct_rows().size(), 6u);
}

TEST(CpqrSketch, LargestRowIsPickedFirst) {
  Matrix a(5, 2);
  a << 0.01, 0.02, 10.0, 0.0, -0.01, 0.01, 0.02, -0.01, 0.01, 0.01;
  EXPECT_EQ(cpqr_sketch(a, 1).rows().indices[0], 1);
}

TEST(CpqrSketch, RejectsOversizedM) {
  EXPECT_THROW(cpqr_sketch(random_matrix(5, 2, 1), 6), InvalidArgument);
  EXPECT_THROW(cpqr_sketch(random_matrix(5, 2, 1), 0), InvalidArgument);
}

TEST(LeveragedVolume, SquareCaseSelectsEveryRow) {
  const Matrix a = random_matrix(4, 4, 12);
  const SketchOperator s = leveraged_volume_sketch(a, {SketchKind::leveraged_volume, 4, 13});
  const auto rows = s.distinct_rows();
  EXPECT_EQ(rows, (std::vector<Index>{0, 1, 2, 3}));
}

TEST(LeveragedVolume, DeterministicGivenSeed) {
  const Matrix a = random_matrix(30, 3, 14);
  const SketchSpec spec{SketchKind::leveraged_volume, 6, 15};
  EXPECT_EQ(leveraged_volume_sketch(a, spec).rows().indices, leveraged_volume_sketch(a, spec).rows().indices);
}

TEST(LeveragedVolume, SelectionsAreNeverSingular) {
  const Matrix a = random_matrix(30, 3, 16);
  const OrthoBasis basis = orthonormal_basis(a);
  for (std::uint64_t t = 0; t < 10000; ++t) {
    const SketchOperator s = leveraged_volume_sketch(basis, {SketchKind::leveraged_volume, 6, t});
    ASSERT_EQ(numerical_rank(s.apply(a)), 3) << "trial " << t;
  }
}

TEST(LeveragedVolume, UnbiasedSolutions) {
  const Matrix a = random_matrix(30, 3, 17);
  const Vector b = random_vector(30, 18);
  const OrthoBasis basis = orthonormal_basis(a);
  const Vector x_star = solve_full_ls(a, b).x;
  const int draws = 2000;
  Eigen::MatrixXd xs(3, draws);
  for (int t = 0; t < draws; ++t) {
    const SketchOperator s = leveraged_volume_sketch(basis, {SketchKind::leveraged_volume, 6, static_cast<std::uint64_t>(t)});
    xs.col(t) = solve_sketched_ls(a, b, s).x;
  }
  const Eigen::VectorXd mean = xs.rowwise().mean();
  for (Index k = 0; k < 3; ++k) {
    const double var = (xs.row(k).array() - mean(k)).square().sum() / (draws - 1);
    EXPECT_LE(std::abs(mean(k) - x_star(k)), 3.0 * std::sqrt(var / draws)) << "component " << k;
  }
}

TEST(LeveragedVolume, RejectsTooSmallM) {
  EXPECT_THROW(leveraged_volume_sketch(random_matrix(10, 3, 1), {SketchKind::leveraged_volume, 2, 0}), InvalidArgument);
}

TEST(ApplySketch, IdentityRowSampleLeavesOperand) {
  const Matrix m = random_matrix(6, 2, 3);
  EXPECT_TRUE((apply_sketch(SketchOperator::identity(6), m).array() == m.array()).all());
}

TEST(ApplySketch, WeightedGather) {
  const SketchOperator s({SketchKind::uniform, 2, 0}, 3, RowSample{{2, 0}, {1.0, 2.0}});
  Vector v(3);
  v << 5, 6, 7;
  const Vector out = apply_sketch(s, v);
  EXPECT_EQ(out(0), 7.0);
  EXPECT_EQ(out(1), 10.0);
}

TEST(ApplySketch, MatchesExplicitMatrix) {
  const Matrix m = random_matrix(40, 3, 4);
  const Matrix a = random_matrix(40, 3, 5);
  const SketchOperator row = leverage_sketch(leverage_profile(a), {SketchKind::leverage, 12, 6});
  const SketchOperator dense = gaussian_sketch(40, {SketchKind::gaussian, 12, 7});
  for (const auto* s : {&row, &dense}) {
    const Matrix ref = s->explicit_matrix() * m;
    EXPECT_LE((apply_sketch(*s, m) - ref).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_TRUE((apply_sketch(dense, Matrix(Matrix::Identity(40, 40))).array() == dense.dense().array()).all());
}

TEST(ApplySketch, DimensionMismatchThrows) {
  EXPECT_THROW(apply_sketch(SketchOperator::identity(4), Vector(Vector::Ones(5))), DimensionMismatch);
}

TEST(SketchOperator, ValidatesRowSamples) {
  EXPECT_THROW(SketchOperator({SketchKind::uniform, 1, 0}, 3, RowSample{{3}, {1.0}}), InvalidArgument);
  EXPECT_THROW(SketchOperator({SketchKind::uniform, 1, 0}, 3, RowSample{{0}, {0.0}}), InvalidArgument);
  EXPECT_THROW(SketchOperator({SketchKind::uniform, 1, 0}, 3, RowSample{{0, 1}, {1.0}}), DimensionMismatch);
}

TEST(SketchJson, RoundTrip) {
  const Matrix a = random_matrix(50, 3, 8);
  const SketchOperator row = leverage_sketch(leverage_profile(a), {SketchKind::leverage, 9, 9});
  const SketchOperator back = sketch_from_json(to_json(row));
  EXPECT_EQ(back.rows().indices, row.rows().indices);
  EXPECT_EQ(back.rows().weights, row.rows().weights);
  EXPECT_EQ(back.spec().seed, 9u);
  const SketchOperator dense = gaussian_sketch(50, {SketchKind::gaussian, 9, 10});
  const std::string text = to_json(dense);
  EXPECT_EQ(text.find("weights"), std::string::npos);
  EXPECT_TRUE((sketch_from_json(text).dense().array() == dense.dense().array()).all());
  EXPECT_THROW(sketch_from_json("{\"kind\": \"leverage\"}"), InvalidArgument);
}

TEST(SketchFactory, DispatchesEveryKind) {
  const Matrix a = random_matrix(60, 4, 11);
  const OrthoBasis basis = orthonormal_basis(a);
  const SketchFactory f(a, basis);
  for (SketchKind k : {SketchKind::gaussian, SketchKind::uniform, SketchKind::leverage, SketchKind::leveraged_volume,
                       SketchKind::cpqr}) {
    const SketchOperator s = f.make({k, 10, 12});
    EXPECT_EQ(s.spec().kind, k);
    EXPECT_EQ(s.m(), 10);
    EXPECT_EQ(s.n(), 60);
  }
}

TEST(PairCondition, IdentitySketchHolds) {
  const Matrix a = random_matrix(30, 3, 13);
  const OrthoBasis q = orthonormal_basis(a);
  const Eigen::MatrixXd qp = test::complement_basis(a);
  const Vector h = qp.col(0);
  const PairConditionReport r = pair_condition_check(SketchOperator::identity(30), q, h, 0.1);
  EXPECT_TRUE(r.holds());
  EXPECT_NEAR(r.sigma_min_sq, 1.0, 1e-12);
  EXPECT_LE(r.cross_norm_sq, 1e-20);
}

TEST(PairCondition, ZeroSketchFailsSigma) {
  const Matrix a = random_matrix(30, 3, 13);
  const OrthoBasis q = orthonormal_basis(a);
  const Vector h = test::complement_basis(a).col(1);
  const SketchOperator zero({SketchKind::gaussian, 5, 0}, 30, DenseSketch{Matrix::Zero(5, 30)});
  const PairConditionReport r = pair_condition_check(zero, q, h, 0.1);
  EXPECT_FALSE(r.sigma_ok);
  EXPECT_EQ(r.sigma_min_sq, 0.0);
}

TEST(PairCondition, RejectsBadDirection) {
  const Matrix a = random_matrix(30, 3, 13);
  const OrthoBasis q = orthonormal_basis(a);
  const Vector h = test::complement_basis(a).col(0);
  EXPECT_THROW(pair_condition_check(SketchOperator::identity(30), q, 2.0 * h, 0.1), InvalidArgument);
  const Vector mixed = (h + q.q.col(0)).normalized();
  EXPECT_THROW(pair_condition_check(SketchOperator::identity(30), q, mixed, 0.1), InvalidArgument);
}

TEST(PairCondition, ConditionsImplyNearOptimalResidual) {
  const Matrix a = random_matrix(400, 5, 14);
  const LeastSquaresContext ctx(a);
  const Vector b = random_vector(400, 15);
  const Vector h = ctx.orthogonal_part(b).normalized();
  const double eps = 0.5;
  int checked = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const SketchOperator s = gaussian_sketch(400, {SketchKind::gaussian, 150, t});
    if (!pair_condition_check(s, ctx.basis(), h, eps).holds()) continue;
    ++checked;
    const double rs = *ctx.solve_sketched(b, s).residual_norm;
    EXPECT_LE(rs, (1 + eps) * ctx.optimal_residual(b));
  }
  EXPECT_GT(checked, 10);
}

TEST(PairCondition, GaussianAtTheoreticalSizeUsuallyHolds) {
  const Index n = 1000, d = 20;
  EmbeddingParams p;
  p.d = d;
  p.l = 1;
  p.eps = 0.5;
  p.delta = 0.1;
  const Index m = min_embedding_dim(SketchKind::gaussian, p);
  const Matrix a = random_matrix(n, d, 16);
  const OrthoBasis q = orthonormal_basis(a);
  const Vector h = LeastSquaresContext(a).orthogonal_part(random_vector(n, 17)).normalized();
  int ok = 0;
  const int trials = 60;
  for (int t = 0; t < trials; ++t)
    ok += pair_condition_check(gaussian_sketch(n, {SketchKind::gaussian, m, static_cast<std::uint64_t>(t)}), q, h, 0.5).holds();
  EXPECT_GE(ok, static_cast<int>(0.9 * trials));
}

TEST(MinEmbeddingDim, LeverageExampleTakesLargerBranch) {
  EmbeddingParams p;
  p.d = 50;
  p.l = 10;
  p.eps = 0.1;
  p.delta = 0.1;
  // 35 * 50 * log(20000) = 17331.1..., 2 * 50 * 10 / 0.01 = 100000.
  EXPECT_NEAR(35.0 * 50.0 * std::log(20000.0), 17331.1, 0.1);
  EXPECT_EQ(min_embedding_dim(SketchKind::leverage, p), 100000);
}

TEST(MinEmbeddingDim, LogBranchDominatesForLargeEps) {
  EmbeddingParams p;
  p.d = 10;
  p.l = 1;
  p.eps = 0.49;
  p.delta = 0.49;
  EXPECT_EQ(min_embedding_dim(SketchKind::leverage, p), static_cast<Index>(std::ceil(350.0 * std::log(40.0 / 0.49))));
}

TEST(MinEmbeddingDim, CoherenceBranchCoefficient) {
  EmbeddingParams p;
  p.d = 10;
  p.l = 2;
  p.eps = 0.1;
  p.delta = 0.1;
  p.c_lev = 1.0;
  // max{35, 4 / 0.1} = 40.
  EXPECT_EQ(min_embedding_dim(SketchKind::leverage, p), static_cast<Index>(std::ceil(40.0 * 10.0 * std::log(800.0))));
}

TEST(MinEmbeddingDim, SubGaussianFormula) {
  EmbeddingParams p;
  p.d = 20;
  p.eps = 0.5;
  p.delta = 0.1;
  p.k_subgauss = 1.0;
  EXPECT_EQ(min_embedding_dim(SketchKind::gaussian, p), static_cast<Index>(std::ceil(40.0 * std::log(800.0))));
  p.k_subgauss = kGaussianSubgaussianNorm;
  EXPECT_EQ(min_embedding_dim(SketchKind::gaussian, p),
            static_cast<Index>(std::ceil(64.0 / 9.0 * 40.0 * std::log(800.0))));
}

TEST(MinEmbeddingDim, RejectsInvalidRanges) {
  EmbeddingParams p;
  p.eps = 0.6;
  EXPECT_THROW(min_embedding_dim(SketchKind::leverage, p), InvalidArgument);
  p.eps = 0.1;
  p.delta = 0.0;
  EXPECT_THROW(min_embedding_dim(SketchKind::gaussian, p), InvalidArgument);
  p.delta = 0.1;
  EXPECT_THROW(min_embedding_dim(SketchKind::uniform, p), InvalidArgument);
}

}  // namespace
}  // namespace bfb
