#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bfb/sketch_operator.hpp"
#include "bfb/types.hpp"

namespace bfb {

enum class ExperimentKind { corr, bound, boost };

std::string_view to_string(ExperimentKind kind) noexcept;
ExperimentKind parse_experiment_kind(std::string_view name);

struct DataFiles {
  std::string a;   // design matrix, BFB1 or CSV
  std::string b;   // high-fidelity vector
  std::string bt;  // low-fidelity vector
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::corr;
  Index n = 1000;
  Index d = 50;
  std::vector<SketchKind> sketches;
  std::vector<Index> m_values;  // boost: empty selects {ceil(1.2 d), 2d}
  Index l = 10;
  Index reps = 100;
  double eps = 0.01;
  std::vector<double> kappas;
  std::vector<double> phis;
  std::optional<DataFiles> data;  // boost only; replaces the synthetic pair
  std::string out;
  std::uint64_t seed = 1;
};

ExperimentConfig default_config(ExperimentKind kind);
// Throws InvalidArgument on out-of-range settings.
void validate(const ExperimentConfig& cfg);
std::string config_to_json(const ExperimentConfig& cfg);
// Keys absent from the JSON keep the defaults of `base`.
ExperimentConfig config_from_json(std::string_view json, const ExperimentConfig& base);

// stream_seed applied once per tag, left to right.
std::uint64_t derived_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

struct BoxStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;

  double iqr() const noexcept { return q3 - q1; }
};

// Quartiles by linear interpolation between order statistics.
BoxStats box_stats(std::vector<double> values);

// Correlation of mu^2 under low and high fidelity data.
struct CorrCell {
  double kappa = 0.0;
  double phi = 0.0;
  SketchKind sketch = SketchKind::gaussian;
  double correlation = 0.0;
  Index samples = 0;
};

struct CorrPoint {
  double kappa = 0.0;
  double phi = 0.0;
  SketchKind sketch = SketchKind::gaussian;
  Index trial = 0;
  std::uint64_t seed = 0;
  double mu2_low = 0.0;
  double mu2_high = 0.0;
  bool rank_ok = true;
};

struct CorrResult {
  std::vector<CorrCell> cells;
  std::vector<CorrPoint> points;
};

CorrResult corr_experiment(const ExperimentConfig& cfg);
void write_corr_table_csv(std::ostream& os, const CorrResult& result);
void write_corr_points_csv(std::ostream& os, const CorrResult& result);

// Optimality gap of the boosted selection against its bound, one record per grid cell.
struct BoundRecord {
  Index run = 0;
  SketchKind sketch = SketchKind::gaussian;
  double kappa = 0.0;
  double phi = 0.0;
  double nu = 0.0;
  bool degenerate = false;
  double mu_selected = 0.0;
  double mu_oracle = 0.0;
  double gap = 0.0;
  double bound = 0.0;
  bool violated = false;
  Index selected = 0;
  Index oracle = 0;
};

struct BoundResult {
  std::vector<BoundRecord> records;

  Index violations(SketchKind sketch) const;
};

BoundResult bound_experiment(const ExperimentConfig& cfg);
void write_bound_csv(std::ostream& os, const BoundResult& result);

// Relative error of boosted and single-sketch solutions.
struct BoostTrial {
  SketchKind sketch = SketchKind::leverage;
  Index m = 0;
  Index rep = 0;
  double e_bfb = 0.0;
  double e_single = 0.0;
  Index selected = 0;
  Index queries = 0;
};

struct BoostSummaryRow {
  std::string sketch;  // sketch kind, or "full" / "cpqr" for the deterministic references
  Index m = 0;
  std::string method;  // bfb, single, full, cpqr
  BoxStats stats;
};

struct BoostExperimentResult {
  std::vector<BoostTrial> trials;
  std::vector<BoostSummaryRow> summary;
  double e_full = 0.0;
};

BoostExperimentResult boost_experiment(const ExperimentConfig& cfg);
void write_boost_trials_csv(std::ostream& os, const BoostExperimentResult& result);
void write_boost_summary_csv(std::ostream& os, const BoostExperimentResult& result);

}  // namespace bfb
