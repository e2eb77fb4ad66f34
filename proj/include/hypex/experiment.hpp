#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypex/candidates.hpp"
#include "hypex/classifier.hpp"
#include "hypex/diagnostics.hpp"
#include "hypex/features.hpp"
#include "hypex/hypergraph.hpp"
#include "hypex/projection.hpp"
#include "json.hpp"

namespace hypex {

enum class ReportFormat { kJson, kCsv };

ReportFormat parse_report_format(const std::string& name);

struct ExperimentConfig {
  std::filesystem::path dataset;
  DatasetFormat format = DatasetFormat::kEdgeList;
  std::size_t max_hyperedge_size = kDefaultMaxHyperedgeSize;

  std::size_t target_size = 4;
  std::size_t max_order = 3;
  std::vector<FeatureKind> features{kAllFeatureKinds.begin(), kAllFeatureKinds.end()};
  NegativeType neg_type = NegativeType::kClique;
  std::size_t multiplier = 1;
  double retain_frac = 0.6;
  double train_frac = 0.5;
  std::vector<std::uint64_t> seeds{1};
  bool strict_stars = false;

  TrainOptions classifier;
  FeatureOptions feature_options;
  ProjectionOptions projection;

  bool diagnostics = true;
  std::uint64_t diagnostics_samples = 1'000'000;

  std::optional<std::filesystem::path> output;
  ReportFormat output_format = ReportFormat::kJson;
  std::optional<std::filesystem::path> cache_dir;

  // Throws kConfig on the first violated constraint.
  void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& cfg);
// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

// AUC-PR of one (seed, feature, order) model on the test split.
struct CellResult {
  FeatureKind feature = FeatureKind::kCN;
  std::size_t order = 2;
  std::optional<double> auc_pr;
  bool converged = false;
  std::string failure;  // non-empty iff auc_pr is absent
};

struct SeedResult {
  std::uint64_t seed = 0;
  std::size_t positives = 0;
  std::size_t negatives_requested = 0;
  std::size_t negatives = 0;
  bool under_sampled = false;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::string failure;  // seed-level failure before any model was trained
  std::vector<CellResult> cells;
  double seconds = 0.0;
};

struct AggregateCell {
  FeatureKind feature = FeatureKind::kCN;
  std::size_t order = 2;
  std::optional<double> mean_auc_pr;
  std::size_t seeds_used = 0;
  std::string failure;
};

// Gain from order k to k+1. Seed-less entries are computed on seed means.
struct GainCell {
  FeatureKind feature = FeatureKind::kCN;
  std::size_t from_order = 2;
  std::optional<std::uint64_t> seed;
  std::optional<double> gain_pct;
  std::string failure;
};

struct DatasetStats {
  std::size_t node_count = 0;
  std::size_t hyperedges = 0;
  std::map<std::size_t, std::uint64_t> projected_edges;  // order -> |E_n|
};

struct ExperimentResult {
  ExperimentConfig config;
  DatasetStats stats;
  std::vector<SeedResult> seeds;
  std::vector<AggregateCell> means;
  std::vector<GainCell> gains;
  std::optional<DiagnosticsReport> diagnostics;
  std::string diagnostics_failure;
  double total_seconds = 0.0;

  const AggregateCell* mean(FeatureKind feature, std::size_t order) const;
  const GainCell* gain(FeatureKind feature, std::size_t from_order) const;
};

// Loads the dataset named by the config and runs every seed.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Same pipeline on an already-loaded hypergraph.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const Hypergraph& hg);

// Single-seed pipeline; what run_experiment executes for each seed.
SeedResult run_seed(const ExperimentConfig& cfg, const Hypergraph& hg, std::uint64_t seed);

// Fills means and gains from the per-seed results.
void aggregate(ExperimentResult& result);

nlohmann::json to_json(const ExperimentResult& result, bool include_timings = true);
ExperimentResult result_from_json(const nlohmann::json& j);

// CSV header: row_type,seed,feature,order,auc_pr,gain_pct
void write_csv(std::ostream& out, const ExperimentResult& result);

void emit_report(const ExperimentResult& result, ReportFormat format, const std::filesystem::path& path);

DatasetStats dataset_stats(const Hypergraph& hg, std::size_t max_order,
                           const ProjectionOptions& options = {});

// Stable content fingerprint (hex) of a hypergraph, used in cache file names.
std::string fingerprint(const Hypergraph& hg);

// Reads `<dir>/<stem>.<fingerprint>.n<order>.pg` if present, else projects
// and writes it.
ProjectedGraph load_or_project(const Hypergraph& hg, std::size_t order,
                               const std::filesystem::path& cache_dir, const std::string& stem,
                               const ProjectionOptions& options = {});

std::filesystem::path cache_path(const Hypergraph& hg, std::size_t order,
                                 const std::filesystem::path& cache_dir, const std::string& stem);

}  // namespace hypex
