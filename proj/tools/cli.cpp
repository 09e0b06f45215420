#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfb/design.hpp"
#include "bfb/errors.hpp"
#include "bfb/experiments.hpp"
#include "bfb/io.hpp"
#include "bfb/rng.hpp"
#include "bfb/sketch.hpp"
#include "bfb/wick.hpp"

namespace bfb::cli {

namespace {

namespace fs = std::filesystem;
using io::format_real;
using nlohmann::json;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw InvalidArgument("cannot write '" + path.string() + "'");
  os << text;
  if (!os) throw InvalidArgument("write to '" + path.string() + "' failed");
}

fs::path sibling(const fs::path& out, const std::string& suffix) {
  return out.parent_path() / (out.stem().string() + suffix);
}

fs::path sidecar(const fs::path& out) { return fs::path(out.string() + ".json"); }

json parse_config(const std::string& path) {
  try {
    json j = json::parse(read_text(path));
    if (!j.is_object()) throw InvalidArgument("config '" + path + "': top level must be an object");
    return j;
  } catch (const json::exception& e) {
    throw InvalidArgument("config '" + path + "': " + e.what());
  }
}

template <class T>
void from_config(const json& j, const char* key, const CLI::Option* flag, T& target) {
  if (flag->count() > 0 || !j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config key '") + key + "': " + e.what());
  }
}

void print_provenance(std::ostream& out, const std::vector<fs::path>& files) {
  for (const auto& f : files) out << "wrote " << f.string() << '\n';
}

// ---------------------------------------------------------------------------
// Experiments

struct ExperimentFlags {
  ExperimentKind kind = ExperimentKind::corr;
  std::string config;
  std::uint64_t seed = 1;
  std::string out;
  Index reps = 0;
  std::vector<std::string> sketches;
  std::vector<Index> m;
  Index l = 0;
  std::vector<double> kappa;
  std::vector<double> phi;
  Index n = 0;
  Index d = 0;
  double eps = 0.0;
  std::string a, b, bt;
  bool quiet = false;
  std::map<std::string, CLI::Option*> opts;
};

void add_experiment_options(CLI::App* sub, ExperimentFlags& f) {
  f.opts["config"] = sub->add_option("--config", f.config, "JSON file mirroring the experiment config");
  f.opts["seed"] = sub->add_option("--seed", f.seed, "base seed (default 1)");
  f.opts["out"] = sub->add_option("--out", f.out, "output CSV path");
  f.opts["reps"] = sub->add_option("--reps", f.reps, "repetitions");
  f.opts["sketch"] = sub->add_option("--sketch", f.sketches, "sketch kind(s), comma separated")->delimiter(',');
  f.opts["m"] = sub->add_option("--m", f.m, "embedding dimension(s), comma separated")->delimiter(',');
  f.opts["L"] = sub->add_option("--L", f.l, "number of sketches per boosting run");
  f.opts["kappa"] = sub->add_option("--kappa", f.kappa, "kappa value(s), comma separated")->delimiter(',');
  f.opts["phi"] = sub->add_option("--phi", f.phi, "phi value(s), comma separated")->delimiter(',');
  f.opts["n"] = sub->add_option("--n", f.n, "rows N of the synthetic design");
  f.opts["d"] = sub->add_option("--d", f.d, "columns d of the synthetic design");
  f.opts["eps"] = sub->add_option("--eps", f.eps, "epsilon used by the gap bound");
  if (f.kind == ExperimentKind::boost) {
    f.opts["a"] = sub->add_option("--a", f.a, "design matrix file (BFB1 or .csv)");
    f.opts["b"] = sub->add_option("--b", f.b, "high-fidelity vector file");
    f.opts["bt"] = sub->add_option("--bt", f.bt, "low-fidelity vector file");
  }
  sub->add_flag("--quiet", f.quiet, "suppress the summary table");
}

bool given(const ExperimentFlags& f, const std::string& key) {
  const auto it = f.opts.find(key);
  return it != f.opts.end() && it->second->count() > 0;
}

ExperimentConfig resolve_config(const ExperimentFlags& f) {
  ExperimentConfig cfg = default_config(f.kind);
  if (given(f, "config")) cfg = config_from_json(read_text(f.config), cfg);
  if (given(f, "seed")) cfg.seed = f.seed;
  if (given(f, "out")) cfg.out = f.out;
  if (given(f, "reps")) cfg.reps = f.reps;
  if (given(f, "sketch")) {
    cfg.sketches.clear();
    for (const auto& s : f.sketches) cfg.sketches.push_back(parse_sketch_kind(s));
  }
  if (given(f, "m")) cfg.m_values = f.m;
  if (given(f, "L")) cfg.l = f.l;
  if (given(f, "kappa")) cfg.kappas = f.kappa;
  if (given(f, "phi")) cfg.phis = f.phi;
  if (given(f, "n")) cfg.n = f.n;
  if (given(f, "d")) cfg.d = f.d;
  if (given(f, "eps")) cfg.eps = f.eps;
  const int files = given(f, "a") + given(f, "b") + given(f, "bt");
  if (files == 3) cfg.data = DataFiles{f.a, f.b, f.bt};
  else if (files != 0) throw InvalidArgument("--a, --b and --bt must be given together");
  validate(cfg);
  return cfg;
}

std::string provenance_json(const char* command, const ExperimentConfig& cfg, const std::vector<fs::path>& outputs) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["seed"] = cfg.seed;
  j["config"] = nlohmann::ordered_json::parse(config_to_json(cfg));
  auto& o = j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& p : outputs) o.push_back(p.string());
  return j.dump(2) + "\n";
}

int run_corr(const ExperimentFlags& f, std::ostream& out) {
  const ExperimentConfig cfg = resolve_config(f);
  const CorrResult r = corr_experiment(cfg);
  const fs::path table = cfg.out;
  const fs::path points = sibling(table, "_points.csv");
  std::ostringstream t, p;
  write_corr_table_csv(t, r);
  write_corr_points_csv(p, r);
  write_text(table, t.str());
  write_text(points, p.str());
  write_text(sidecar(table), provenance_json("corr-exp", cfg, {table, points}));
  if (!f.quiet) {
    out << "kappa  phi    sketch     correlation  samples\n";
    for (const auto& c : r.cells) {
      char line[128];
      std::snprintf(line, sizeof line, "%-6s %-6s %-10s %11.4f  %7lld\n", format_real(c.kappa).c_str(),
                    format_real(c.phi).c_str(), std::string(to_string(c.sketch)).c_str(), c.correlation,
                    static_cast<long long>(c.samples));
      out << line;
    }
    print_provenance(out, {table, points, sidecar(table)});
  }
  return kExitOk;
}

int run_bound(const ExperimentFlags& f, std::ostream& out) {
  const ExperimentConfig cfg = resolve_config(f);
  const BoundResult r = bound_experiment(cfg);
  const fs::path path = cfg.out;
  std::ostringstream s;
  write_bound_csv(s, r);
  write_text(path, s.str());
  write_text(sidecar(path), provenance_json("bound-exp", cfg, {path}));
  if (!f.quiet) {
    out << "sketch            rows  violations  (eps = " << format_real(cfg.eps) << ")\n";
    for (SketchKind k : cfg.sketches) {
      const auto rows = std::count_if(r.records.begin(), r.records.end(), [&](const BoundRecord& x) { return x.sketch == k; });
      char line[128];
      std::snprintf(line, sizeof line, "%-16s %5lld  %10lld\n", std::string(to_string(k)).c_str(),
                    static_cast<long long>(rows), static_cast<long long>(r.violations(k)));
      out << line;
    }
    print_provenance(out, {path, sidecar(path)});
  }
  return kExitOk;
}

int run_boost(const ExperimentFlags& f, std::ostream& out) {
  const ExperimentConfig cfg = resolve_config(f);
  const BoostExperimentResult r = boost_experiment(cfg);
  const fs::path trials = cfg.out;
  const fs::path summary = sibling(trials, "_summary.csv");
  std::ostringstream t, s;
  write_boost_trials_csv(t, r);
  write_boost_summary_csv(s, r);
  write_text(trials, t.str());
  write_text(summary, s.str());
  write_text(sidecar(trials), provenance_json("boost-exp", cfg, {trials, summary}));
  if (!f.quiet) {
    out << "sketch            m     method   median        iqr\n";
    for (const auto& row : r.summary) {
      char line[160];
      std::snprintf(line, sizeof line, "%-16s %5lld  %-7s %11.4e  %11.4e\n", row.sketch.c_str(),
                    static_cast<long long>(row.m), row.method.c_str(), row.stats.median, row.stats.iqr());
      out << line;
    }
    print_provenance(out, {trials, summary, sidecar(trials)});
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Designs and sketches

struct DesignFlags {
  Index q = 2;
  Index zeta = 4;
  std::string space = "total_degree";
  std::vector<Index> nodes{10};
  Index memory_cap = kDefaultMemoryCap;
  std::vector<std::pair<double, double>> domains;
  CLI::Option* q_opt = nullptr;
  CLI::Option* zeta_opt = nullptr;
  CLI::Option* space_opt = nullptr;
  CLI::Option* nodes_opt = nullptr;
  CLI::Option* cap_opt = nullptr;

  bool any_given() const {
    return q_opt->count() + zeta_opt->count() + space_opt->count() + nodes_opt->count() > 0;
  }
};

void add_design_options(CLI::App* sub, DesignFlags& f) {
  f.q_opt = sub->add_option("--q", f.q, "parameter dimension q (default 2)");
  f.zeta_opt = sub->add_option("--zeta", f.zeta, "maximal polynomial order (default 4)");
  f.space_opt = sub->add_option("--space", f.space, "total_degree | hyperbolic_cross (default total_degree)");
  f.nodes_opt = sub->add_option("--nodes", f.nodes, "Gauss-Legendre points per dimension; one value or q values")
                    ->delimiter(',');
  f.cap_opt = sub->add_option("--memory-cap", f.memory_cap, "maximum entries of an assembled design");
}

void design_from_config(const json& j, DesignFlags& f) {
  from_config(j, "q", f.q_opt, f.q);
  from_config(j, "zeta", f.zeta_opt, f.zeta);
  from_config(j, "space", f.space_opt, f.space);
  if (f.nodes_opt->count() == 0 && j.contains("nodes")) {
    const auto& v = j.at("nodes");
    f.nodes = v.is_array() ? v.get<std::vector<Index>>() : std::vector<Index>{v.get<Index>()};
  }
  from_config(j, "memory_cap", f.cap_opt, f.memory_cap);
  if (j.contains("domains")) f.domains = j.at("domains").get<std::vector<std::pair<double, double>>>();
}

StructuredDesign make_design(const DesignFlags& f) {
  std::vector<Index> nodes = f.nodes;
  if (nodes.size() == 1) nodes.assign(static_cast<std::size_t>(std::max<Index>(f.q, 1)), nodes.front());
  DesignOptions opts;
  opts.memory_cap = f.memory_cap;
  for (const auto& [lo, hi] : f.domains) opts.domains.push_back({lo, hi});
  return build_design(std::move(nodes), index_set(f.q, f.zeta, parse_space_kind(f.space)), std::move(opts));
}

struct DesignBuildFlags {
  std::string config;
  std::string out = "design.bfb1";
  bool quiet = false;
  DesignFlags design;
  CLI::Option* config_opt = nullptr;
  CLI::Option* out_opt = nullptr;
};

int run_design_build(DesignBuildFlags& f, std::ostream& out) {
  if (f.config_opt->count() > 0) {
    const json j = parse_config(f.config);
    design_from_config(j, f.design);
    from_config(j, "out", f.out_opt, f.out);
  }
  const StructuredDesign design = make_design(f.design);
  const Matrix& a = design.assembled();
  const fs::path path = f.out;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  io::write_bfb1(path, a);
  write_text(sidecar(path), design_to_json(design) + "\n");
  if (!f.quiet) {
    const double ortho = (a.transpose() * a - Matrix::Identity(a.cols(), a.cols())).cwiseAbs().maxCoeff();
    out << "space " << to_string(design.index_set().kind) << ", q = " << design.q() << ", zeta = "
        << design.index_set().zeta << '\n';
    out << "N = " << design.rows() << ", d = " << design.cols() << ", max|A^T A - I| = " << format_real(ortho) << '\n';
    print_provenance(out, {path, sidecar(path)});
  }
  return kExitOk;
}

struct SampleFlags {
  std::string config;
  std::string a;
  std::string sketch = "leverage";
  Index m = 0;
  std::uint64_t seed = 1;
  std::string out = "sketch.json";
  bool quiet = false;
  DesignFlags design;
  CLI::Option* config_opt = nullptr;
  CLI::Option* a_opt = nullptr;
  CLI::Option* sketch_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* out_opt = nullptr;
};

Matrix read_matrix_any(const std::string& path) {
  const bool csv = fs::path(path).extension() == ".csv";
  return csv ? io::read_csv(path) : io::read_bfb1(path);
}

int run_sample(SampleFlags& f, std::ostream& out) {
  bool design_in_config = false;
  if (f.config_opt->count() > 0) {
    const json j = parse_config(f.config);
    from_config(j, "a", f.a_opt, f.a);
    from_config(j, "sketch", f.sketch_opt, f.sketch);
    from_config(j, "m", f.m_opt, f.m);
    from_config(j, "seed", f.seed_opt, f.seed);
    from_config(j, "out", f.out_opt, f.out);
    design_in_config = j.contains("q") || j.contains("zeta") || j.contains("space") || j.contains("nodes");
    design_from_config(j, f.design);
  }
  const bool from_design = f.design.any_given() || design_in_config;
  if (f.a.empty() == !from_design) throw InvalidArgument("sample: give either --a or design flags (--q/--zeta/--space/--nodes)");
  if (f.m < 1) throw InvalidArgument("sample: --m is required and must be positive");
  const SketchSpec spec{parse_sketch_kind(f.sketch), f.m, f.seed};

  std::optional<SketchOperator> s;
  if (from_design) {
    const StructuredDesign design = make_design(f.design);
    if (spec.kind == SketchKind::leverage) {
      s = KronLeverageSampler(design).sample(spec.m, spec.seed);
    } else {
      const Matrix& a = design.assembled();
      const OrthoBasis basis = orthonormal_basis(a);
      s = SketchFactory(a, basis).make(spec);
    }
  } else {
    const Matrix a = read_matrix_any(f.a);
    const OrthoBasis basis = orthonormal_basis(a);
    s = SketchFactory(a, basis).make(spec);
  }
  const fs::path path = f.out;
  write_text(path, to_json(*s) + "\n");
  if (!f.quiet) {
    out << "sketch " << to_string(s->spec().kind) << ", m = " << s->m() << ", N = " << s->n();
    if (s->is_row_sample()) out << ", distinct rows = " << s->distinct_rows().size();
    out << '\n';
    print_provenance(out, {path});
  }
  return kExitOk;
}

struct WickFlags {
  std::string config;
  Index dim = 5;
  Index samples = 1'000'000;
  std::uint64_t seed = 1;
  std::string out = "wick.csv";
  bool quiet = false;
  CLI::Option* config_opt = nullptr;
  CLI::Option* dim_opt = nullptr;
  CLI::Option* samples_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* out_opt = nullptr;
};

int run_wick(WickFlags& f, std::ostream& out) {
  if (f.config_opt->count() > 0) {
    const json j = parse_config(f.config);
    from_config(j, "dim", f.dim_opt, f.dim);
    from_config(j, "samples", f.samples_opt, f.samples);
    from_config(j, "seed", f.seed_opt, f.seed);
    from_config(j, "out", f.out_opt, f.out);
  }
  if (f.dim < 2) throw InvalidArgument("wick-check: --dim must be at least 2");
  const Vector e1 = Vector::Unit(f.dim, 0);
  const Vector e2 = Vector::Unit(f.dim, 1);
  CounterRng rng(stream_seed(f.seed, 0));
  Vector w(f.dim), z(f.dim);
  for (Index i = 0; i < f.dim; ++i) w(i) = rng.normal();
  for (Index i = 0; i < f.dim; ++i) z(i) = rng.normal();

  struct Case {
    const char* name;
    WickCheck check;
  };
  const std::vector<Case> cases{
      {"orthogonal", wick_mc_check(e1, e2, f.samples, stream_seed(f.seed, 1))},
      {"identical", wick_mc_check(e1, e1, f.samples, stream_seed(f.seed, 2))},
      {"random", wick_mc_check(w, z, f.samples, stream_seed(f.seed, 3))},
  };
  std::ostringstream csv;
  csv << "case,mc_estimate,exact,rel_err\n";
  for (const auto& c : cases)
    csv << c.name << ',' << format_real(c.check.mc_estimate) << ',' << format_real(c.check.exact) << ','
        << format_real(c.check.rel_err) << '\n';
  const fs::path path = f.out;
  write_text(path, csv.str());
  if (!f.quiet) {
    out << "case         mc_estimate     exact   rel_err   (" << f.samples << " samples)\n";
    for (const auto& c : cases) {
      char line[128];
      std::snprintf(line, sizeof line, "%-11s %12.6f %9.6f %9.2e\n", c.name, c.check.mc_estimate, c.check.exact,
                    c.check.rel_err);
      out << line;
    }
    print_provenance(out, {path});
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sketched least squares with bi-fidelity boosting", "bfb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bfb 0.1.0");

  ExperimentFlags corr;
  corr.kind = ExperimentKind::corr;
  ExperimentFlags bound;
  bound.kind = ExperimentKind::bound;
  ExperimentFlags boost;
  boost.kind = ExperimentKind::boost;
  auto* corr_cmd = app.add_subcommand("corr-exp", "correlation of mu^2 under low and high fidelity data");
  auto* bound_cmd = app.add_subcommand("bound-exp", "boosted optimality gap against its bound over a (phi, kappa) grid");
  auto* boost_cmd = app.add_subcommand("boost-exp", "relative error of boosted versus single-sketch solutions");
  add_experiment_options(corr_cmd, corr);
  add_experiment_options(bound_cmd, bound);
  add_experiment_options(boost_cmd, boost);

  DesignBuildFlags build;
  auto* build_cmd = app.add_subcommand("design-build", "assemble a tensor Gauss-Legendre design matrix");
  build.config_opt = build_cmd->add_option("--config", build.config, "JSON file with design settings");
  build.out_opt = build_cmd->add_option("--out", build.out, "output BFB1 path (default design.bfb1)");
  build_cmd->add_flag("--quiet", build.quiet, "suppress the summary");
  add_design_options(build_cmd, build.design);

  SampleFlags sample;
  auto* sample_cmd = app.add_subcommand("sample", "draw one sketch and write it as JSON");
  sample.config_opt = sample_cmd->add_option("--config", sample.config, "JSON file with sampling settings");
  sample.a_opt = sample_cmd->add_option("--a", sample.a, "design matrix file (BFB1 or .csv)");
  sample.sketch_opt = sample_cmd->add_option("--sketch", sample.sketch, "sketch kind (default leverage)");
  sample.m_opt = sample_cmd->add_option("--m", sample.m, "embedding dimension");
  sample.seed_opt = sample_cmd->add_option("--seed", sample.seed, "seed (default 1)");
  sample.out_opt = sample_cmd->add_option("--out", sample.out, "output JSON path (default sketch.json)");
  sample_cmd->add_flag("--quiet", sample.quiet, "suppress the summary");
  add_design_options(sample_cmd, sample.design);

  WickFlags wick;
  auto* wick_cmd = app.add_subcommand("wick-check", "Monte-Carlo check of E[<w,x>^2 <z,x>^2] = 2<w,z>^2 + |w|^2 |z|^2");
  wick.config_opt = wick_cmd->add_option("--config", wick.config, "JSON file with settings");
  wick.dim_opt = wick_cmd->add_option("--dim", wick.dim, "dimension of w and z (default 5)");
  wick.samples_opt = wick_cmd->add_option("--samples,--reps", wick.samples, "Monte-Carlo samples (default 1000000)");
  wick.seed_opt = wick_cmd->add_option("--seed", wick.seed, "seed (default 1)");
  wick.out_opt = wick_cmd->add_option("--out", wick.out, "output CSV path (default wick.csv)");
  wick_cmd->add_flag("--quiet", wick.quiet, "suppress the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*corr_cmd) return run_corr(corr, out);
    if (*bound_cmd) return run_bound(bound, out);
    if (*boost_cmd) return run_boost(boost, out);
    if (*build_cmd) return run_design_build(build, out);
    if (*sample_cmd) return run_sample(sample, out);
    if (*wick_cmd) return run_wick(wick, out);
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bfb::cli
