#include "bfb/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "bfb/boost.hpp"
#include "bfb/bounds.hpp"
#include "bfb/errors.hpp"
#include "bfb/io.hpp"
#include "bfb/linalg.hpp"
#include "bfb/rng.hpp"
#include "bfb/sketch.hpp"
#include "bfb/synthetic.hpp"

namespace bfb {

using io::format_real;

std::string_view to_string(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::corr: return "corr";
    case ExperimentKind::bound: return "bound";
    case ExperimentKind::boost: return "boost";
  }
  return "corr";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  if (name == "corr") return ExperimentKind::corr;
  if (name == "bound") return ExperimentKind::bound;
  if (name == "boost") return ExperimentKind::boost;
  throw InvalidArgument("unknown experiment kind '" + std::string(name) + "'");
}

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ExperimentKind::corr:
      cfg.sketches = {SketchKind::gaussian, SketchKind::leverage};
      cfg.m_values = {100};
      cfg.reps = 100;
      cfg.kappas = {0.2, 0.95};
      cfg.phis = {0.3, 0.95};
      cfg.out = "corr.csv";
      break;
    case ExperimentKind::bound:
      cfg.sketches = {SketchKind::gaussian, SketchKind::leverage};
      cfg.m_values = {100};
      cfg.reps = 1;
      cfg.kappas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
      cfg.phis = cfg.kappas;
      cfg.out = "bound.csv";
      break;
    case ExperimentKind::boost:
      cfg.d = 20;
      cfg.sketches = {SketchKind::uniform, SketchKind::leverage, SketchKind::leveraged_volume};
      cfg.reps = 1000;
      cfg.kappas = {0.2};
      cfg.phis = {0.99};
      cfg.out = "boost.csv";
      break;
  }
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& msg) { throw InvalidArgument("config: " + msg); };
  if (!cfg.data && (cfg.d < 2 || cfg.n < cfg.d + 2)) fail("need 2 <= d < n - 1");
  if (cfg.sketches.empty()) fail("at least one sketch kind is required");
  for (Index m : cfg.m_values)
    if (m < 1) fail("m must be at least 1");
  if (cfg.kind != ExperimentKind::boost && cfg.m_values.empty()) fail("m is required");
  if (cfg.l < 1) fail("L must be at least 1");
  if (cfg.reps < 1) fail("reps must be at least 1");
  if (!(cfg.eps > 0.0)) fail("eps must be positive");
  if (cfg.kappas.empty() || cfg.phis.empty()) fail("kappa and phi values are required");
  for (double v : cfg.kappas)
    if (!(v >= 0.0 && v <= 1.0)) fail("kappa values must lie in [0, 1]");
  for (double v : cfg.phis)
    if (!(v >= 0.0 && v <= 1.0)) fail("phi values must lie in [0, 1]");
  if (cfg.data && cfg.kind != ExperimentKind::boost) fail("data files are only used by the boost experiment");
  if (cfg.kind == ExperimentKind::corr || cfg.kind == ExperimentKind::bound)
    for (SketchKind k : cfg.sketches)
      if (k == SketchKind::cpqr) fail("cpqr is deterministic and cannot be drawn repeatedly");
}

std::string config_to_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(cfg.kind);
  j["n"] = cfg.n;
  j["d"] = cfg.d;
  auto& sk = j["sketches"] = nlohmann::ordered_json::array();
  for (SketchKind k : cfg.sketches) sk.push_back(to_string(k));
  j["m"] = cfg.m_values;
  j["L"] = cfg.l;
  j["reps"] = cfg.reps;
  j["eps"] = cfg.eps;
  j["kappa"] = cfg.kappas;
  j["phi"] = cfg.phis;
  if (cfg.data) j["data"] = {{"a", cfg.data->a}, {"b", cfg.data->b}, {"bt", cfg.data->bt}};
  j["out"] = cfg.out;
  j["seed"] = cfg.seed;
  return j.dump(2);
}

namespace {

template <class T>
std::vector<T> scalar_or_list(const nlohmann::json& v) {
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

}  // namespace

ExperimentConfig config_from_json(std::string_view text, const ExperimentConfig& base) {
  ExperimentConfig cfg = base;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw InvalidArgument("config: top level must be a JSON object");
    for (const auto& [key, v] : j.items()) {
      if (key == "kind") {
        const auto kind = parse_experiment_kind(v.get<std::string>());
        if (kind != cfg.kind) throw InvalidArgument("config: kind '" + v.get<std::string>() + "' does not match the command");
      } else if (key == "n") cfg.n = v.get<Index>();
      else if (key == "d") cfg.d = v.get<Index>();
      else if (key == "sketches" || key == "sketch") {
        cfg.sketches.clear();
        for (const auto& name : scalar_or_list<std::string>(v)) cfg.sketches.push_back(parse_sketch_kind(name));
      } else if (key == "m") cfg.m_values = scalar_or_list<Index>(v);
      else if (key == "L") cfg.l = v.get<Index>();
      else if (key == "reps") cfg.reps = v.get<Index>();
      else if (key == "eps") cfg.eps = v.get<double>();
      else if (key == "kappa") cfg.kappas = scalar_or_list<double>(v);
      else if (key == "phi") cfg.phis = scalar_or_list<double>(v);
      else if (key == "data") cfg.data = DataFiles{v.at("a").get<std::string>(), v.at("b").get<std::string>(), v.at("bt").get<std::string>()};
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else throw InvalidArgument("config: unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  return cfg;
}

std::uint64_t derived_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = base;
  for (auto t : tags) s = stream_seed(s, t);
  return s;
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("pearson_correlation: need two equal samples of size >= 2");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) return std::nan("");
  return sxy / std::sqrt(sxx * syy);
}

BoxStats box_stats(std::vector<double> v) {
  if (v.empty()) throw InvalidArgument("box_stats: empty sample");
  std::sort(v.begin(), v.end());
  auto quantile = [&](double p) {
    const double pos = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
  };
  return {v.front(), quantile(0.25), quantile(0.5), quantile(0.75), v.back()};
}

namespace {

// Tags that keep the sketch streams of different experiments and kinds apart.
constexpr std::uint64_t kCorrTag = 0xC0;
constexpr std::uint64_t kBoundTag = 0xB0;
constexpr std::uint64_t kBoostTag = 0xB1;

std::uint64_t kind_tag(SketchKind k) { return static_cast<std::uint64_t>(k) + 1; }

}  // namespace

CorrResult corr_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::corr) throw InvalidArgument("corr_experiment: wrong config kind");
  validate(cfg);
  const SyntheticGenerator gen(cfg.n, cfg.d, cfg.seed);
  const LeastSquaresContext& ctx = gen.context();
  const SketchFactory factory(gen.a(), ctx.basis());
  const Index m = cfg.m_values.front();

  // One sequence of sketches per kind, shared by every (kappa, phi) cell.
  std::map<SketchKind, std::vector<SketchOperator>> pools;
  for (SketchKind kind : cfg.sketches) {
    auto& pool = pools[kind];
    for (Index t = 0; t < cfg.reps; ++t)
      pool.push_back(factory.make({kind, m, derived_seed(cfg.seed, {kCorrTag, kind_tag(kind), static_cast<std::uint64_t>(t)})}));
  }

  CorrResult out;
  for (SketchKind kind : cfg.sketches) {
    for (double kappa : cfg.kappas) {
      const Vector b = gen.high(kappa);
      for (double phi : cfg.phis) {
        const Vector bt = gen.low(b, phi);
        std::vector<double> lo, hi;
        for (Index t = 0; t < cfg.reps; ++t) {
          const SketchOperator& s = pools[kind][static_cast<std::size_t>(t)];
          CorrPoint p{kappa, phi, kind, t, s.spec().seed, std::nan(""), std::nan(""), true};
          try {
            const double mh = ctx.optimality_coefficient(b, s);
            const double ml = ctx.optimality_coefficient(bt, s);
            p.mu2_high = mh * mh;
            p.mu2_low = ml * ml;
            lo.push_back(p.mu2_low);
            hi.push_back(p.mu2_high);
          } catch (const RankDropError&) {
            p.rank_ok = false;
          }
          out.points.push_back(p);
        }
        const double c = lo.size() >= 2 ? pearson_correlation(lo, hi) : std::nan("");
        out.cells.push_back({kappa, phi, kind, c, static_cast<Index>(lo.size())});
      }
    }
  }
  return out;
}

void write_corr_table_csv(std::ostream& os, const CorrResult& r) {
  os << "kappa,phi,sketch,correlation,samples\n";
  for (const auto& c : r.cells)
    os << format_real(c.kappa) << ',' << format_real(c.phi) << ',' << to_string(c.sketch) << ','
       << format_real(c.correlation) << ',' << c.samples << '\n';
}

void write_corr_points_csv(std::ostream& os, const CorrResult& r) {
  os << "kappa,phi,sketch,trial,seed,mu2_low,mu2_high,rank_ok\n";
  for (const auto& p : r.points)
    os << format_real(p.kappa) << ',' << format_real(p.phi) << ',' << to_string(p.sketch) << ',' << p.trial << ','
       << p.seed << ',' << format_real(p.mu2_low) << ',' << format_real(p.mu2_high) << ',' << (p.rank_ok ? 1 : 0)
       << '\n';
}

Index BoundResult::violations(SketchKind sketch) const {
  return static_cast<Index>(std::count_if(records.begin(), records.end(),
                                          [&](const BoundRecord& r) { return r.sketch == sketch && r.violated; }));
}

BoundResult bound_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::bound) throw InvalidArgument("bound_experiment: wrong config kind");
  validate(cfg);
  const SyntheticGenerator gen(cfg.n, cfg.d, cfg.seed);
  const LeastSquaresContext& ctx = gen.context();
  const SketchFactory factory(gen.a(), ctx.basis());
  const Index m = cfg.m_values.front();

  BoundResult out;
  for (Index run = 0; run < cfg.reps; ++run) {
    for (SketchKind kind : cfg.sketches) {
      // A single sequence of L sketches serves the whole (phi, kappa) grid.
      std::vector<SketchOperator> sketches;
      for (Index l = 0; l < cfg.l; ++l)
        sketches.push_back(factory.make(
            {kind, m,
             derived_seed(cfg.seed, {kBoundTag, static_cast<std::uint64_t>(run), kind_tag(kind), static_cast<std::uint64_t>(l)})}));
      for (double kappa : cfg.kappas) {
        const Vector b = gen.high(kappa);
        for (double phi : cfg.phis) {
          const Vector bt = gen.low(b, phi);
          const CorrelationMetrics metrics = correlation_metrics(ctx, b, bt);
          FidelityPair pair{bt, EntryOracle::from_vector(b)};
          const BoostResult boost = run_bfb(ctx, pair, sketches);
          BoundRecord rec;
          rec.run = run;
          rec.sketch = kind;
          rec.kappa = kappa;
          rec.phi = phi;
          rec.nu = metrics.nu;
          rec.degenerate = metrics.degenerate;
          rec.selected = boost.selected;
          rec.oracle = oracle_index(ctx, b, sketches);
          rec.mu_selected = ctx.optimality_coefficient(b, sketches[static_cast<std::size_t>(rec.selected)]);
          rec.mu_oracle = ctx.optimality_coefficient(b, sketches[static_cast<std::size_t>(rec.oracle)]);
          rec.gap = rec.mu_selected - rec.mu_oracle;
          rec.bound = metrics.degenerate ? 0.0 : optimality_gap_bound(metrics.nu, cfg.eps);
          rec.violated = rec.gap > rec.bound;
          out.records.push_back(rec);
        }
      }
    }
  }
  return out;
}

void write_bound_csv(std::ostream& os, const BoundResult& r) {
  os << "run,sketch,kappa,phi,nu,mu_selected,mu_oracle,gap,bound,violated,selected,oracle\n";
  for (const auto& x : r.records)
    os << x.run << ',' << to_string(x.sketch) << ',' << format_real(x.kappa) << ',' << format_real(x.phi) << ','
       << format_real(x.nu) << ',' << format_real(x.mu_selected) << ',' << format_real(x.mu_oracle) << ','
       << format_real(x.gap) << ',' << format_real(x.bound) << ',' << (x.violated ? 1 : 0) << ',' << x.selected
       << ',' << x.oracle << '\n';
}

namespace {

Matrix read_matrix_file(const std::string& path) {
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  return csv ? io::read_csv(path) : io::read_bfb1(path);
}

Vector read_vector_file(const std::string& path) {
  const Matrix m = read_matrix_file(path);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  throw InvalidArgument("'" + path + "' does not hold a vector");
}

}  // namespace

BoostExperimentResult boost_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentKind::boost) throw InvalidArgument("boost_experiment: wrong config kind");
  validate(cfg);

  Matrix a;
  Vector b, bt;
  if (cfg.data) {
    a = read_matrix_file(cfg.data->a);
    b = read_vector_file(cfg.data->b);
    bt = read_vector_file(cfg.data->bt);
    if (b.size() != a.rows() || bt.size() != a.rows()) throw DimensionMismatch("data vectors must match A's rows");
  } else {
    const SyntheticPair p = SyntheticGenerator(cfg.n, cfg.d, cfg.seed).pair(cfg.kappas.front(), cfg.phis.front());
    a = p.a;
    b = p.b;
    bt = p.bt;
  }
  const LeastSquaresContext ctx(a);
  const SketchFactory factory(ctx.a(), ctx.basis());
  const Index d = ctx.cols();
  std::vector<Index> ms = cfg.m_values;
  if (ms.empty()) ms = {static_cast<Index>(std::ceil(1.2 * static_cast<double>(d) - 1e-9)), 2 * d};

  BoostExperimentResult out;
  out.e_full = relative_error(ctx.a(), ctx.solve_full(b).x, b);
  out.summary.push_back({"full", ctx.rows(), "full", box_stats({out.e_full})});

  for (SketchKind kind : cfg.sketches) {
    for (Index m : ms) {
      if (kind == SketchKind::cpqr) continue;
      std::vector<double> e_bfb, e_single;
      for (Index rep = 0; rep < cfg.reps; ++rep) {
        std::vector<SketchOperator> sketches;
        for (Index l = 0; l < cfg.l; ++l)
          sketches.push_back(factory.make(
              {kind, m,
               derived_seed(cfg.seed, {kBoostTag, kind_tag(kind), static_cast<std::uint64_t>(m),
                                       static_cast<std::uint64_t>(rep), static_cast<std::uint64_t>(l)})}));
        FidelityPair pair{bt, EntryOracle::from_vector(b)};
        const BoostResult r = run_bfb(ctx, pair, sketches);
        BoostTrial t;
        t.sketch = kind;
        t.m = m;
        t.rep = rep;
        t.e_bfb = relative_error(ctx.a(), r.x_bfb, b);
        // Baseline: the first sketch of the same sequence, used without selection.
        t.e_single = relative_error(ctx.a(), ctx.solve_sketched(b, sketches.front()).x, b);
        t.selected = r.selected;
        t.queries = r.high_fid_queries;
        e_bfb.push_back(t.e_bfb);
        e_single.push_back(t.e_single);
        out.trials.push_back(t);
      }
      out.summary.push_back({std::string(to_string(kind)), m, "bfb", box_stats(e_bfb)});
      out.summary.push_back({std::string(to_string(kind)), m, "single", box_stats(e_single)});
    }
  }
  for (Index m : ms) {
    if (m > ctx.rows()) continue;
    const SketchOperator s = cpqr_sketch(ctx.a(), m);
    const double e = relative_error(ctx.a(), ctx.solve_sketched(b, s).x, b);
    out.summary.push_back({"cpqr", m, "cpqr", box_stats({e})});
  }
  return out;
}

void write_boost_trials_csv(std::ostream& os, const BoostExperimentResult& r) {
  os << "sketch,m,rep,e_bfb,e_single,selected,queries\n";
  for (const auto& t : r.trials)
    os << to_string(t.sketch) << ',' << t.m << ',' << t.rep << ',' << format_real(t.e_bfb) << ','
       << format_real(t.e_single) << ',' << t.selected << ',' << t.queries << '\n';
}

void write_boost_summary_csv(std::ostream& os, const BoostExperimentResult& r) {
  os << "sketch,m,method,min,q1,median,q3,max\n";
  for (const auto& s : r.summary)
    os << s.sketch << ',' << s.m << ',' << s.method << ',' << format_real(s.stats.min) << ','
       << format_real(s.stats.q1) << ',' << format_real(s.stats.median) << ',' << format_real(s.stats.q3) << ','
       << format_real(s.stats.max) << '\n';
}

}  // namespace bfb
