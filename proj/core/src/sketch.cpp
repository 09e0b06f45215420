#include "bfb/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "bfb/discrete.hpp"
#include "bfb/errors.hpp"
#include "bfb/rng.hpp"

namespace bfb {

namespace {

void require_kind(const SketchSpec& spec, SketchKind kind) {
  if (spec.kind != kind)
    throw InvalidArgument("sketch spec kind '" + std::string(to_string(spec.kind)) + "' passed to the " +
                          std::string(to_string(kind)) + " constructor");
  if (spec.m < 1) throw InvalidArgument("embedding dimension m must be at least 1");
}

}  // namespace

LeverageProfile leverage_profile(const OrthoBasis& basis) {
  LeverageProfile out;
  out.scores = basis.q.rowwise().squaredNorm();
  out.coherence = out.scores.maxCoeff();
  out.rank = basis.rank;
  return out;
}

LeverageProfile leverage_profile(const Matrix& a) { return leverage_profile(orthonormal_basis(a)); }

SketchOperator gaussian_sketch(Index n, const SketchSpec& spec) {
  require_kind(spec, SketchKind::gaussian);
  if (n < 1) throw InvalidArgument("gaussian sketch needs n >= 1");
  CounterRng rng(spec.seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(spec.m));
  Matrix s(spec.m, n);
  for (Index i = 0; i < spec.m; ++i)
    for (Index j = 0; j < n; ++j) s(i, j) = scale * rng.normal();
  return SketchOperator(spec, n, DenseSketch{std::move(s)});
}

SketchOperator uniform_sketch(Index n, const SketchSpec& spec) {
  require_kind(spec, SketchKind::uniform);
  if (n < 1) throw InvalidArgument("uniform sketch needs n >= 1");
  CounterRng rng(spec.seed);
  RowSample rows;
  rows.indices.resize(static_cast<std::size_t>(spec.m));
  for (auto& idx : rows.indices) idx = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
  rows.weights.assign(static_cast<std::size_t>(spec.m),
                      std::sqrt(static_cast<double>(n) / static_cast<double>(spec.m)));
  return SketchOperator(spec, n, std::move(rows));
}

SketchOperator leverage_sketch(const LeverageProfile& profile, const SketchSpec& spec) {
  require_kind(spec, SketchKind::leverage);
  const Index n = profile.scores.size();
  if (n < 1) throw InvalidArgument("leverage profile is empty");
  const AliasTable table(std::span<const double>(profile.scores.data(), static_cast<std::size_t>(n)));
  CounterRng rng(spec.seed);
  RowSample rows;
  rows.indices.reserve(static_cast<std::size_t>(spec.m));
  rows.weights.reserve(static_cast<std::size_t>(spec.m));
  const double m = static_cast<double>(spec.m);
  for (Index j = 0; j < spec.m; ++j) {
    const Index i = table.draw(rng);
    rows.indices.push_back(i);
    rows.weights.push_back(1.0 / std::sqrt(m * table.probability(i)));
  }
  return SketchOperator(spec, n, std::move(rows));
}

SketchOperator cpqr_sketch(const Matrix& a, Index m) {
  const Index n = a.rows();
  const Index d = a.cols();
  if (m < 1 || m > n) throw InvalidArgument("cpqr sketch needs 1 <= m <= N");
  if (!a.allFinite()) throw InvalidArgument("matrix entries must be finite");

  std::vector<Index> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), Index{0});
  RowSample rows;
  Index left = m;
  while (left > 0) {
    const auto r = static_cast<Index>(remaining.size());
    Eigen::MatrixXd at(d, r);
    for (Index c = 0; c < r; ++c) at.col(c) = a.row(remaining[static_cast<std::size_t>(c)]).transpose();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(at);
    const auto& perm = qr.colsPermutation().indices();
    const Index k = std::min(d, left);
    std::vector<char> taken(static_cast<std::size_t>(r), 0);
    for (Index t = 0; t < k; ++t) {
      const Index local = perm(t);
      taken[static_cast<std::size_t>(local)] = 1;
      rows.indices.push_back(remaining[static_cast<std::size_t>(local)]);
    }
    std::vector<Index> next;
    next.reserve(remaining.size() - static_cast<std::size_t>(k));
    for (Index c = 0; c < r; ++c)
      if (!taken[static_cast<std::size_t>(c)]) next.push_back(remaining[static_cast<std::size_t>(c)]);
    remaining = std::move(next);
    left -= k;
  }
  rows.weights.assign(rows.indices.size(), 1.0);
  return SketchOperator(SketchSpec{SketchKind::cpqr, m, 0}, n, std::move(rows));
}

namespace {

// One attempt at leveraged volume sampling; returns false on numerical breakdown.
bool volume_attempt(const OrthoBasis& basis, const AliasTable& table, Index m, Index pool_size,
                    int max_rejections, CounterRng& rng, RowSample& out) {
  const Index r = basis.rank;
  const auto& u = basis.q;
  std::vector<Index> pool(static_cast<std::size_t>(pool_size));
  Eigen::MatrixXd x(pool_size, r);

  // Determinantal rejection: accept an i.i.d. pool with probability det((1/s) X^T X) <= 1.
  bool accepted = false;
  for (int round = 0; round < max_rejections && !accepted; ++round) {
    for (Index j = 0; j < pool_size; ++j) {
      const Index i = table.draw(rng);
      pool[static_cast<std::size_t>(j)] = i;
      x.row(j) = u.row(i) / std::sqrt(table.probability(i));
    }
    const Eigen::MatrixXd gram = (x.transpose() * x) / static_cast<double>(pool_size);
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) continue;
    const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    accepted = std::log(rng.uniform()) < log_det;
  }
  if (!accepted) throw NumericalError("leveraged volume sampling: determinantal rejection did not accept");

  // Reverse iterative volume sampling: drop row j with probability proportional to 1 - h_j.
  std::vector<Index> alive(static_cast<std::size_t>(pool_size));
  std::iota(alive.begin(), alive.end(), Index{0});
  auto refresh = [&](Eigen::MatrixXd& z) {
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(r, r);
    for (Index j : alive) gram.selfadjointView<Eigen::Lower>().rankUpdate(x.row(j).transpose());
    gram = gram.selfadjointView<Eigen::Lower>();
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) return false;
    z = llt.solve(Eigen::MatrixXd::Identity(r, r));
    return z.allFinite();
  };
  Eigen::MatrixXd z;
  if (!refresh(z)) return false;
  Index since_refresh = 0;
  while (static_cast<Index>(alive.size()) > m) {
    const auto count = static_cast<std::uint64_t>(alive.size());
    const std::uint64_t max_tries = 1000 * count;
    std::size_t slot = 0;
    double h = 0.0;
    bool picked = false;
    for (std::uint64_t t = 0; t < max_tries; ++t) {
      slot = static_cast<std::size_t>(rng.below(count));
      const auto row = x.row(alive[slot]);
      h = std::clamp(row.dot(row * z), 0.0, 1.0);
      if (rng.uniform() < 1.0 - h) {
        picked = true;
        break;
      }
    }
    if (!picked) return false;
    const Eigen::VectorXd v = z * x.row(alive[slot]).transpose();
    alive[slot] = alive.back();
    alive.pop_back();
    ++since_refresh;
    if (since_refresh >= std::max<Index>(1, static_cast<Index>(alive.size()) / 10)) {
      if (!refresh(z)) return false;
      since_refresh = 0;
    } else {
      z += v * v.transpose() / (1.0 - h);
    }
  }

  out.indices.clear();
  out.weights.clear();
  const double md = static_cast<double>(m);
  for (Index j : alive) {
    const Index i = pool[static_cast<std::size_t>(j)];
    out.indices.push_back(i);
    out.weights.push_back(1.0 / std::sqrt(md * table.probability(i)));
  }
  return true;
}

}  // namespace

SketchOperator leveraged_volume_sketch(const OrthoBasis& basis, const SketchSpec& spec, const VolumeOptions& options) {
  require_kind(spec, SketchKind::leveraged_volume);
  const Index d = basis.rank;
  if (spec.m < d) throw InvalidArgument("leveraged volume sampling needs m >= rank(A)");
  const Index pool_size = options.pool_size > 0 ? std::max(options.pool_size, spec.m) : std::max(4 * d * d, spec.m);
  const LeverageProfile profile = leverage_profile(basis);
  const AliasTable table(std::span<const double>(profile.scores.data(), static_cast<std::size_t>(profile.scores.size())));
  RowSample rows;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    CounterRng rng(attempt == 0 ? spec.seed : stream_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
    if (volume_attempt(basis, table, spec.m, pool_size, options.max_rejections, rng, rows))
      return SketchOperator(spec, basis.q.rows(), std::move(rows));
  }
  throw NumericalError("leveraged volume sampling: selected pool stayed numerically rank deficient after " +
                       std::to_string(options.max_retries) + " retries");
}

SketchOperator leveraged_volume_sketch(const Matrix& a, const SketchSpec& spec, const VolumeOptions& options) {
  return leveraged_volume_sketch(orthonormal_basis(a), spec, options);
}

Matrix apply_sketch(const SketchOperator& s, const Matrix& operand) { return s.apply(operand); }
Vector apply_sketch(const SketchOperator& s, const Vector& operand) { return s.apply(operand); }

PairConditionReport pair_condition_check(const SketchOperator& s, const OrthoBasis& q, const Vector& h, double eps) {
  if (h.size() != q.q.rows() || s.n() != q.q.rows()) throw DimensionMismatch("pair_condition_check: size mismatch");
  if (std::abs(h.norm() - 1.0) > 1e-10) throw InvalidArgument("pair_condition_check: h must be a unit vector");
  if ((q.q.transpose() * h).norm() > 1e-8) throw InvalidArgument("pair_condition_check: h must be orthogonal to range(Q)");
  if (!(eps > 0.0)) throw InvalidArgument("pair_condition_check: eps must be positive");

  const Matrix sq = s.apply(q.q);
  const Vector sh = s.apply(h);
  PairConditionReport out;
  if (sq.rows() >= sq.cols()) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd{Eigen::MatrixXd(sq)};
    const double smin = svd.singularValues()(sq.cols() - 1);
    out.sigma_min_sq = smin * smin;
  } else {
    out.sigma_min_sq = 0.0;
  }
  out.cross_norm_sq = (sq.transpose() * sh).squaredNorm();
  out.sigma_ok = out.sigma_min_sq >= std::sqrt(2.0) / 2.0;
  out.cross_ok = out.cross_norm_sq <= eps / 2.0;
  return out;
}

SketchFactory::SketchFactory(const Matrix& a, const OrthoBasis& basis, VolumeOptions volume)
    : a_(&a), basis_(&basis), profile_(leverage_profile(basis)), volume_(volume) {
  if (a.rows() != basis.q.rows()) throw DimensionMismatch("SketchFactory: basis and matrix row counts differ");
}

SketchOperator SketchFactory::make(const SketchSpec& spec) const {
  const Index n = a_->rows();
  switch (spec.kind) {
    case SketchKind::gaussian: return gaussian_sketch(n, spec);
    case SketchKind::uniform: return uniform_sketch(n, spec);
    case SketchKind::leverage: return leverage_sketch(profile_, spec);
    case SketchKind::leveraged_volume: return leveraged_volume_sketch(*basis_, spec, volume_);
    case SketchKind::cpqr: return cpqr_sketch(*a_, spec.m);
  }
  throw InvalidArgument("unknown sketch kind");
}

std::string to_json(const SketchOperator& s) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(s.spec().kind);
  j["m"] = s.m();
  j["seed"] = s.spec().seed;
  j["n"] = s.n();
  if (s.is_row_sample()) {
    j["indices"] = s.rows().indices;
    j["weights"] = s.rows().weights;
  } else if (s.spec().kind != SketchKind::gaussian) {
    throw InvalidArgument("only Gaussian dense sketches can be serialized (they are regenerated from the seed)");
  }
  return j.dump();
}

SketchOperator sketch_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    SketchSpec spec{parse_sketch_kind(j.at("kind").get<std::string>()), j.at("m").get<Index>(),
                    j.at("seed").get<std::uint64_t>()};
    const auto n = j.at("n").get<Index>();
    if (spec.kind == SketchKind::gaussian) return gaussian_sketch(n, spec);
    RowSample rows{j.at("indices").get<std::vector<Index>>(), j.at("weights").get<std::vector<double>>()};
    return SketchOperator(spec, n, std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed sketch JSON: ") + e.what());
  }
}

}  // namespace bfb
