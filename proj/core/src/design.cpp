#include "bfb/design.hpp"

#include <cmath>
#include <mutex>

#include <json.hpp>

#include "bfb/errors.hpp"
#include "bfb/linalg.hpp"

namespace bfb {

std::string_view to_string(SpaceKind kind) noexcept {
  return kind == SpaceKind::total_degree ? "total_degree" : "hyperbolic_cross";
}

SpaceKind parse_space_kind(std::string_view name) {
  std::string s(name);
  for (auto& c : s)
    if (c == '-') c = '_';
  if (s == "total_degree" || s == "td") return SpaceKind::total_degree;
  if (s == "hyperbolic_cross" || s == "hc") return SpaceKind::hyperbolic_cross;
  throw InvalidArgument("unknown space kind '" + std::string(name) + "'");
}

namespace {

void enumerate(Index dim, Index budget, MultiIndex& current, const IndexSet& shape, std::vector<MultiIndex>& out) {
  if (dim == shape.q) {
    out.push_back(current);
    return;
  }
  for (Index j = 0;; ++j) {
    Index rest = 0;
    if (shape.kind == SpaceKind::total_degree) {
      if (j > budget) break;
      rest = budget - j;
    } else {
      if (j + 1 > budget) break;
      rest = budget / (j + 1);
    }
    current[static_cast<std::size_t>(dim)] = j;
    enumerate(dim + 1, rest, current, shape, out);
  }
}

}  // namespace

IndexSet index_set(Index q, Index zeta, SpaceKind kind) {
  if (q < 1) throw InvalidArgument("index_set: q must be at least 1");
  if (zeta < 0) throw InvalidArgument("index_set: zeta must be nonnegative");
  IndexSet out{q, zeta, kind, {}};
  MultiIndex current(static_cast<std::size_t>(q), 0);
  // Depth-first with ascending entries yields lexicographic, i.e. ascending Kronecker, order.
  enumerate(0, kind == SpaceKind::total_degree ? zeta : zeta + 1, current, out, out.indices);
  return out;
}

Index kronecker_column(const MultiIndex& j, Index zeta) {
  Index c = 0;
  for (Index jk : j) {
    if (jk < 0 || jk > zeta) throw InvalidArgument("kronecker_column: entry outside [0, zeta]");
    c = c * (zeta + 1) + jk;
  }
  return c;
}

struct StructuredDesign::Cache {
  std::once_flag once;
  Matrix matrix;
};

StructuredDesign::StructuredDesign(std::vector<Index> per_dim_nodes, IndexSet iset, DesignOptions options)
    : nodes_per_dim_(std::move(per_dim_nodes)),
      iset_(std::move(iset)),
      options_(std::move(options)),
      cache_(std::make_shared<Cache>()) {
  if (static_cast<Index>(nodes_per_dim_.size()) != iset_.q)
    throw DimensionMismatch("build_design: need one node count per dimension");
  if (!options_.domains.empty() && static_cast<Index>(options_.domains.size()) != iset_.q)
    throw DimensionMismatch("build_design: need one domain per dimension");
  for (const auto& dom : options_.domains)
    if (!(dom.lo < dom.hi)) throw InvalidArgument("build_design: empty domain interval");
  if (iset_.size() == 0) throw InvalidArgument("build_design: empty index set");

  const Index width = iset_.zeta + 1;
  for (Index nk : nodes_per_dim_) {
    if (nk < 1) throw InvalidArgument("build_design: every N_k must be at least 1");
    n_ *= nk;
    rules_.push_back(gauss_legendre_rule(nk));
    const auto& rule = rules_.back();
    Matrix f(nk, width);
    for (Index r = 0; r < nk; ++r) {
      const auto psi = normalized_legendre_all(iset_.zeta, rule.nodes[static_cast<std::size_t>(r)]);
      const double sw = std::sqrt(rule.weights[static_cast<std::size_t>(r)]);
      for (Index j = 0; j < width; ++j) f(r, j) = sw * psi[static_cast<std::size_t>(j)];
    }
    factors_.push_back(std::move(f));
  }
  column_map_.reserve(iset_.indices.size());
  for (const auto& j : iset_.indices) column_map_.push_back(kronecker_column(j, iset_.zeta));
  for (std::size_t c = 1; c < column_map_.size(); ++c)
    if (column_map_[c] <= column_map_[c - 1]) throw InvalidArgument("build_design: column map must ascend");
}

MultiIndex StructuredDesign::row_multi_index(Index n) const {
  if (n < 0 || n >= n_) throw InvalidArgument("row index out of range");
  MultiIndex out(nodes_per_dim_.size());
  for (std::size_t k = nodes_per_dim_.size(); k-- > 0;) {
    out[k] = n % nodes_per_dim_[k];
    n /= nodes_per_dim_[k];
  }
  return out;
}

std::vector<double> StructuredDesign::point(Index n) const {
  const auto r = row_multi_index(n);
  std::vector<double> p(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double x = rules_[k].nodes[static_cast<std::size_t>(r[k])];
    if (options_.domains.empty()) {
      p[k] = x;
    } else {
      const auto& dom = options_.domains[k];
      p[k] = dom.lo + 0.5 * (x + 1.0) * (dom.hi - dom.lo);
    }
  }
  return p;
}

double StructuredDesign::sqrt_weight(Index n) const {
  const auto r = row_multi_index(n);
  double w = 1.0;
  for (std::size_t k = 0; k < r.size(); ++k) w *= rules_[k].weights[static_cast<std::size_t>(r[k])];
  return std::sqrt(w);
}

const Matrix& StructuredDesign::assembled() const {
  const Index d = cols();
  if (static_cast<double>(n_) * static_cast<double>(d) > static_cast<double>(options_.memory_cap))
    throw MemoryCapExceeded("assembled design has " + std::to_string(n_) + " x " + std::to_string(d) +
                            " entries, above the cap of " + std::to_string(options_.memory_cap));
  std::call_once(cache_->once, [&] {
    Matrix a(n_, d);
    for (Index n = 0; n < n_; ++n) {
      const auto r = row_multi_index(n);
      for (Index c = 0; c < d; ++c) {
        const auto& j = iset_.indices[static_cast<std::size_t>(c)];
        double v = 1.0;
        for (std::size_t k = 0; k < r.size(); ++k) v *= factors_[k](r[k], j[k]);
        a(n, c) = v;
      }
    }
    cache_->matrix = std::move(a);
  });
  return cache_->matrix;
}

bool StructuredDesign::is_assembled() const noexcept { return cache_->matrix.size() > 0; }

StructuredDesign build_design(std::vector<Index> per_dim_nodes, IndexSet iset, DesignOptions options) {
  return StructuredDesign(std::move(per_dim_nodes), std::move(iset), std::move(options));
}

Vector assemble_data_vector(const StructuredDesign& design, const ParameterFunction& f) {
  Vector b(design.rows());
  for (Index n = 0; n < design.rows(); ++n) {
    const auto p = design.point(n);
    const double v = f(p);
    if (!std::isfinite(v)) throw InvalidArgument("assemble_data_vector: f returned a non-finite value");
    b(n) = design.sqrt_weight(n) * v;
  }
  return b;
}

KronLeverageSampler::KronLeverageSampler(const StructuredDesign& design)
    : q_(design.q()),
      n_(design.rows()),
      nodes_per_dim_(design.nodes_per_dim()),
      columns_(design.index_set().indices) {
  const Index width = design.index_set().zeta + 1;
  for (Index k = 0; k < q_; ++k) {
    const Matrix& f = design.factors()[static_cast<std::size_t>(k)];
    if (f.rows() < width || numerical_rank(f) < width)
      throw RankDropError(static_cast<std::size_t>(std::min(f.rows(), width)), static_cast<std::size_t>(width));
    Eigen::HouseholderQR<Eigen::MatrixXd> qr{Eigen::MatrixXd(f)};
    Eigen::MatrixXd qk = qr.householderQ() * Eigen::MatrixXd::Identity(f.rows(), width);
    std::vector<AliasTable> per_col;
    per_col.reserve(static_cast<std::size_t>(width));
    std::vector<double> sq(static_cast<std::size_t>(f.rows()));
    for (Index j = 0; j < width; ++j) {
      for (Index r = 0; r < f.rows(); ++r) sq[static_cast<std::size_t>(r)] = qk(r, j) * qk(r, j);
      per_col.emplace_back(sq);
    }
    bases_.push_back(std::move(qk));
    tables_.push_back(std::move(per_col));
  }
}

Index KronLeverageSampler::draw(CounterRng& rng) const {
  const auto& j = columns_[static_cast<std::size_t>(rng.below(columns_.size()))];
  Index row = 0;
  for (Index k = 0; k < q_; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    row = row * nodes_per_dim_[ku] + tables_[ku][static_cast<std::size_t>(j[ku])].draw(rng);
  }
  return row;
}

double KronLeverageSampler::leverage(Index i) const {
  MultiIndex r(static_cast<std::size_t>(q_));
  for (Index k = q_; k-- > 0;) {
    const auto ku = static_cast<std::size_t>(k);
    r[ku] = i % nodes_per_dim_[ku];
    i /= nodes_per_dim_[ku];
  }
  double total = 0.0;
  for (const auto& j : columns_) {
    double v = 1.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const double e = bases_[k](r[k], j[k]);
      v *= e * e;
    }
    total += v;
  }
  return total;
}

SketchOperator KronLeverageSampler::sample(Index m, std::uint64_t seed) const {
  if (m < 1) throw InvalidArgument("kron_leverage_sample: m must be at least 1");
  CounterRng rng(seed);
  RowSample rows;
  rows.indices.reserve(static_cast<std::size_t>(m));
  rows.weights.reserve(static_cast<std::size_t>(m));
  const double d = static_cast<double>(columns_.size());
  const double md = static_cast<double>(m);
  for (Index t = 0; t < m; ++t) {
    const Index i = draw(rng);
    rows.indices.push_back(i);
    rows.weights.push_back(1.0 / std::sqrt(md * leverage(i) / d));
  }
  return SketchOperator(SketchSpec{SketchKind::leverage, m, seed}, n_, std::move(rows));
}

SketchOperator kron_leverage_sample(const StructuredDesign& design, Index m, std::uint64_t seed) {
  return KronLeverageSampler(design).sample(m, seed);
}

Vector exact_row_distribution(const StructuredDesign& design) {
  const OrthoBasis basis = orthonormal_basis(design.assembled());
  Vector p = basis.q.rowwise().squaredNorm();
  return p / static_cast<double>(basis.rank);
}

std::string design_to_json(const StructuredDesign& design) {
  nlohmann::ordered_json j;
  const auto& iset = design.index_set();
  j["q"] = iset.q;
  j["zeta"] = iset.zeta;
  j["space"] = to_string(iset.kind);
  j["nodes_per_dim"] = design.nodes_per_dim();
  j["rows"] = design.rows();
  j["cols"] = design.cols();
  j["indices"] = iset.indices;
  j["column_map"] = design.column_map();
  if (!design.options().domains.empty()) {
    auto& doms = j["domains"] = nlohmann::ordered_json::array();
    for (const auto& d : design.options().domains) doms.push_back({d.lo, d.hi});
  }
  return j.dump();
}

}  // namespace bfb
