#include "hypex/experiment.hpp"

#include <tbb/parallel_for.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "hypex/error.hpp"
#include "hypex/seeding.hpp"

namespace hypex {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string mean_mode_name(MeanMode mode) {
  return mode == MeanMode::kAllPotentialPairs ? "all_pairs" : "existing_edges";
}

MeanMode parse_mean_mode(const std::string& name) {
  if (name == "all_pairs") return MeanMode::kAllPotentialPairs;
  if (name == "existing_edges") return MeanMode::kExistingEdges;
  throw Error(ErrorCode::kConfig, "unknown mean mode '" + name + "'");
}

std::string format_name(ReportFormat f) { return f == ReportFormat::kJson ? "json" : "csv"; }

// Keeps CSV fields single-cell.
std::string sanitize(std::string text) {
  for (auto& ch : text) {
    if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"') ch = ';';
  }
  return text;
}

std::string format_double(double x) {
  // Same shortest round-trip form nlohmann uses for JSON numbers.
  return nlohmann::json(x).dump();
}

nlohmann::json optional_number(const std::optional<double>& value, const std::string& failure) {
  if (value) return *value;
  return "failed:" + failure;
}

std::optional<double> read_optional_number(const nlohmann::json& j, std::string& failure) {
  if (j.is_number()) return j.get<double>();
  const auto text = j.get<std::string>();
  failure = text.rfind("failed:", 0) == 0 ? text.substr(7) : text;
  return std::nullopt;
}

std::string describe_failure(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return std::string(to_string(err->code())) + ": " + err->what();
  }
  return e.what();
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw Error(ErrorCode::kConfig, "unknown report format '" + name + "' (expected json or csv)");
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kConfig, what); };
  if (target_size < 3) fail("target_size must be >= 3");
  if (target_size > max_hyperedge_size) fail("target_size exceeds max_hyperedge_size");
  if (max_order < 2 || max_order + 1 > target_size) fail("max_order must satisfy 2 <= max_order <= target_size - 1");
  if (max_order > kMaxKeySize) fail("max_order exceeds the supported maximum");
  if (features.empty()) fail("at least one feature is required");
  if (multiplier < 1) fail("multiplier must be >= 1");
  if (!(retain_frac > 0.0 && retain_frac < 1.0)) fail("retain_frac must lie in (0, 1)");
  if (!(train_frac > 0.0 && train_frac < 1.0)) fail("train_frac must lie in (0, 1)");
  if (seeds.empty()) fail("at least one seed is required");
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size()) fail("seeds must be distinct");
  if (!(classifier.l2_strength > 0.0)) fail("classifier l2_strength must be positive");
  if (!(classifier.tol > 0.0)) fail("classifier tol must be positive");
  if (diagnostics && diagnostics_samples == 0) fail("diagnostics_samples must be positive");
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json features = nlohmann::json::array();
  for (auto f : cfg.features) features.push_back(to_string(f));
  return nlohmann::json{
      {"dataset", cfg.dataset.string()},
      {"format", to_string(cfg.format)},
      {"max_hyperedge_size", cfg.max_hyperedge_size},
      {"target_size", cfg.target_size},
      {"max_order", cfg.max_order},
      {"features", features},
      {"neg_type", to_string(cfg.neg_type)},
      {"multiplier", cfg.multiplier},
      {"retain_frac", cfg.retain_frac},
      {"train_frac", cfg.train_frac},
      {"seeds", cfg.seeds},
      {"strict_stars", cfg.strict_stars},
      {"classifier",
       {{"l2_strength", cfg.classifier.l2_strength},
        {"tol", cfg.classifier.tol},
        {"max_iter", cfg.classifier.max_iter},
        {"standardize", cfg.classifier.standardize}}},
      {"mean_mode", mean_mode_name(cfg.feature_options.mean_mode)},
      {"max_subsets", cfg.projection.max_subsets},
      {"diagnostics", cfg.diagnostics},
      {"diagnostics_samples", cfg.diagnostics_samples},
      {"output", cfg.output ? nlohmann::json(cfg.output->string()) : nlohmann::json(nullptr)},
      {"output_format", format_name(cfg.output_format)},
      {"cache_dir", cfg.cache_dir ? nlohmann::json(cfg.cache_dir->string()) : nlohmann::json(nullptr)},
  };
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  static const std::set<std::string> kKeys = {
      "dataset", "format", "max_hyperedge_size", "target_size", "max_order", "features",
      "neg_type", "multiplier", "retain_frac", "train_frac", "seeds", "strict_stars",
      "classifier", "mean_mode", "max_subsets", "diagnostics", "diagnostics_samples",
      "output", "output_format", "cache_dir"};
  if (!j.is_object()) throw Error(ErrorCode::kConfig, "config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!kKeys.contains(key)) throw Error(ErrorCode::kConfig, "unknown config key '" + key + "'");
  }
  ExperimentConfig cfg;
  try {
    if (j.contains("dataset")) cfg.dataset = j["dataset"].get<std::string>();
    if (j.contains("format")) cfg.format = parse_dataset_format(j["format"].get<std::string>());
    cfg.max_hyperedge_size = j.value("max_hyperedge_size", cfg.max_hyperedge_size);
    cfg.target_size = j.value("target_size", cfg.target_size);
    cfg.max_order = j.value("max_order", cfg.max_order);
    if (j.contains("features")) {
      cfg.features.clear();
      for (const auto& f : j["features"]) cfg.features.push_back(parse_feature_kind(f.get<std::string>()));
    }
    if (j.contains("neg_type")) cfg.neg_type = parse_negative_type(j["neg_type"].get<std::string>());
    cfg.multiplier = j.value("multiplier", cfg.multiplier);
    cfg.retain_frac = j.value("retain_frac", cfg.retain_frac);
    cfg.train_frac = j.value("train_frac", cfg.train_frac);
    if (j.contains("seeds")) cfg.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    cfg.strict_stars = j.value("strict_stars", cfg.strict_stars);
    if (j.contains("classifier")) {
      const auto& c = j["classifier"];
      cfg.classifier.l2_strength = c.value("l2_strength", cfg.classifier.l2_strength);
      cfg.classifier.tol = c.value("tol", cfg.classifier.tol);
      cfg.classifier.max_iter = c.value("max_iter", cfg.classifier.max_iter);
      cfg.classifier.standardize = c.value("standardize", cfg.classifier.standardize);
    }
    if (j.contains("mean_mode")) cfg.feature_options.mean_mode = parse_mean_mode(j["mean_mode"].get<std::string>());
    cfg.projection.max_subsets = j.value("max_subsets", cfg.projection.max_subsets);
    cfg.diagnostics = j.value("diagnostics", cfg.diagnostics);
    cfg.diagnostics_samples = j.value("diagnostics_samples", cfg.diagnostics_samples);
    if (j.contains("output") && !j["output"].is_null()) cfg.output = j["output"].get<std::string>();
    if (j.contains("output_format")) cfg.output_format = parse_report_format(j["output_format"].get<std::string>());
    if (j.contains("cache_dir") && !j["cache_dir"].is_null()) cfg.cache_dir = j["cache_dir"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config file " + path.string());
  try {
    return config_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kConfig, std::string("config is not valid JSON: ") + e.what());
  }
}

const AggregateCell* ExperimentResult::mean(FeatureKind feature, std::size_t order) const {
  for (const auto& m : means) {
    if (m.feature == feature && m.order == order) return &m;
  }
  return nullptr;
}

const GainCell* ExperimentResult::gain(FeatureKind feature, std::size_t from_order) const {
  for (const auto& g : gains) {
    if (g.feature == feature && g.from_order == from_order && !g.seed) return &g;
  }
  return nullptr;
}

std::string fingerprint(const Hypergraph& hg) {
  std::uint64_t h = derive_seed(hg.node_count(), "hypergraph");
  for (const auto& e : hg.edges()) {
    h = derive_seed(h, e.weight);
    for (auto v : e.nodes) h = derive_seed(h, static_cast<std::uint64_t>(v));
    h = derive_seed(h, "|");
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::filesystem::path cache_path(const Hypergraph& hg, std::size_t order,
                                 const std::filesystem::path& cache_dir, const std::string& stem) {
  return cache_dir / (stem + "." + fingerprint(hg) + ".n" + std::to_string(order) + ".pg");
}

ProjectedGraph load_or_project(const Hypergraph& hg, std::size_t order,
                               const std::filesystem::path& cache_dir, const std::string& stem,
                               const ProjectionOptions& options) {
  const auto path = cache_path(hg, order, cache_dir, stem);
  if (std::ifstream in(path); in) return read_projection(in, hg.node_count());

  auto pg = project(hg, order, options);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  // Write to a temporary name first so parallel seeds never read a partial file.
  const auto tmp = path.string() + ".tmp" + fingerprint(hg);
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::kIo, "cannot write projection cache " + tmp);
    write_projection(out, pg);
  }
  std::filesystem::rename(tmp, path, ec);
  return pg;
}

DatasetStats dataset_stats(const Hypergraph& hg, std::size_t max_order, const ProjectionOptions& options) {
  DatasetStats stats;
  stats.node_count = hg.node_count();
  stats.hyperedges = hg.edge_count();
  for (std::size_t k = 2; k <= max_order; ++k) stats.projected_edges[k] = project(hg, k, options).edge_count();
  return stats;
}

SeedResult run_seed(const ExperimentConfig& cfg, const Hypergraph& hg, std::uint64_t seed) {
  const auto start = Clock::now();
  SeedResult out;
  out.seed = seed;
  auto fail_all = [&](const std::string& reason) {
    out.failure = reason;
    out.cells.clear();
    for (auto kind : cfg.features) {
      for (std::size_t k = 2; k <= cfg.max_order; ++k) out.cells.push_back({kind, k, std::nullopt, false, reason});
    }
  };

  try {
    auto split = split_positives(hg, cfg.target_size, cfg.retain_frac, derive_seed(seed, "removal"));
    out.positives = split.positives.size();

    std::vector<ProjectedGraph> graphs;
    for (std::size_t k = 2; k <= cfg.max_order; ++k) {
      graphs.push_back(cfg.cache_dir ? load_or_project(split.remaining, k, *cfg.cache_dir,
                                                       cfg.dataset.stem().string(), cfg.projection)
                                     : project(split.remaining, k, cfg.projection));
    }
    const Expansion expansion(std::move(graphs));

    NodeSetSet forbidden;
    for (auto i : hg.edges_of_size(cfg.target_size)) forbidden.insert(hg.edge(i).nodes);
    out.negatives_requested = cfg.multiplier * split.positives.size();
    SamplingOptions sampling;
    sampling.strict_stars = cfg.strict_stars;
    const auto& pg2 = expansion.graph(2);
    const auto neg_seed = derive_seed(seed, "negatives");
    auto sampled = cfg.neg_type == NegativeType::kStar
                       ? sample_star_negatives(pg2, cfg.target_size, out.negatives_requested, forbidden, neg_seed, sampling)
                       : sample_clique_negatives(pg2, cfg.target_size, out.negatives_requested, forbidden, neg_seed, sampling);
    out.negatives = sampled.samples.size();

    const auto cs = build_candidate_set(cfg.target_size, std::move(split.positives), std::move(sampled.samples),
                                        cfg.neg_type, cfg.multiplier, seed, &hg);
    out.under_sampled = cs.under_sampled;
    const auto [train, test] = train_test_split(cs, cfg.train_frac, derive_seed(seed, "split"));
    out.train_size = train.size();
    out.test_size = test.size();

    for (auto kind : cfg.features) {
      std::optional<FeatureMatrix> train_fm, test_fm;
      std::string feature_failure;
      try {
        train_fm = feature_matrix(expansion, train, kind, cfg.feature_options);
        test_fm = feature_matrix(expansion, test, kind, cfg.feature_options);
      } catch (const std::exception& e) {
        feature_failure = describe_failure(e);
      }
      for (std::size_t k = 2; k <= cfg.max_order; ++k) {
        CellResult cell{kind, k, std::nullopt, false, feature_failure};
        if (feature_failure.empty()) {
          try {
            const auto x_train = train_fm->leading_columns(k - 1);
            const auto x_test = test_fm->leading_columns(k - 1);
            const auto model = train_logreg(view(x_train), x_train.labels, cfg.classifier);
            const auto scores = predict_scores(model, view(x_test));
            cell.auc_pr = auc_pr(scores, x_test.labels).auc_pr;
            cell.converged = model.converged;
          } catch (const std::exception& e) {
            cell.failure = describe_failure(e);
          }
        }
        out.cells.push_back(std::move(cell));
      }
    }
  } catch (const std::exception& e) {
    fail_all(describe_failure(e));
  }
  out.seconds = seconds_since(start);
  return out;
}

void aggregate(ExperimentResult& result) {
  const auto& cfg = result.config;
  result.means.clear();
  result.gains.clear();
  for (auto kind : cfg.features) {
    for (std::size_t k = 2; k <= cfg.max_order; ++k) {
      AggregateCell agg{kind, k, std::nullopt, 0, ""};
      double sum = 0.0;
      for (const auto& s : result.seeds) {
        for (const auto& c : s.cells) {
          if (c.feature == kind && c.order == k && c.auc_pr) {
            sum += *c.auc_pr;
            ++agg.seeds_used;
          }
        }
      }
      if (agg.seeds_used > 0) {
        agg.mean_auc_pr = sum / static_cast<double>(agg.seeds_used);
      } else {
        agg.failure = "no successful seed";
      }
      result.means.push_back(agg);
    }
  }

  auto make_gain = [](FeatureKind kind, std::size_t k, std::optional<std::uint64_t> seed,
                      std::optional<double> lo, std::optional<double> hi) {
    GainCell g{kind, k, seed, std::nullopt, ""};
    if (!lo || !hi) {
      g.failure = "missing AUC-PR";
    } else {
      try {
        g.gain_pct = percent_gain(*lo, *hi);
      } catch (const std::exception& e) {
        g.failure = describe_failure(e);
      }
    }
    return g;
  };
  for (auto kind : cfg.features) {
    for (std::size_t k = 2; k < cfg.max_order; ++k) {
      result.gains.push_back(make_gain(kind, k, std::nullopt, result.mean(kind, k)->mean_auc_pr,
                                       result.mean(kind, k + 1)->mean_auc_pr));
    }
  }
  for (const auto& s : result.seeds) {
    for (auto kind : cfg.features) {
      for (std::size_t k = 2; k < cfg.max_order; ++k) {
        std::optional<double> lo, hi;
        for (const auto& c : s.cells) {
          if (c.feature != kind) continue;
          if (c.order == k) lo = c.auc_pr;
          if (c.order == k + 1) hi = c.auc_pr;
        }
        result.gains.push_back(make_gain(kind, k, s.seed, lo, hi));
      }
    }
  }
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const Hypergraph& hg) {
  cfg.validate();
  const auto start = Clock::now();
  ExperimentResult result;
  result.config = cfg;
  result.stats = dataset_stats(hg, cfg.max_order, cfg.projection);

  result.seeds.resize(cfg.seeds.size());
  tbb::parallel_for(std::size_t{0}, cfg.seeds.size(),
                    [&](std::size_t i) { result.seeds[i] = run_seed(cfg, hg, cfg.seeds[i]); });

  if (cfg.diagnostics) {
    try {
      const auto pg2 = project(hg, 2, cfg.projection);
      const auto pg3 = project(hg, 3, cfg.projection);
      result.diagnostics = compute_diagnostics(pg2, pg3, hg.node_count(), cfg.diagnostics_samples,
                                               derive_seed(cfg.seeds.front(), "diagnostics"));
    } catch (const std::exception& e) {
      result.diagnostics_failure = describe_failure(e);
    }
  }
  aggregate(result);
  result.total_seconds = seconds_since(start);
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto hg = load_hypergraph(cfg.dataset, cfg.format, cfg.max_hyperedge_size);
  return run_experiment(cfg, hg);
}

nlohmann::json to_json(const ExperimentResult& result, bool include_timings) {
  nlohmann::json j;
  j["config"] = to_json(result.config);

  nlohmann::json projected = nlohmann::json::object();
  for (const auto& [order, count] : result.stats.projected_edges) projected[std::to_string(order)] = count;
  j["dataset"] = {{"node_count", result.stats.node_count},
                  {"hyperedges", result.stats.hyperedges},
                  {"projected_edges", projected}};

  nlohmann::json seeds = nlohmann::json::array();
  for (const auto& s : result.seeds) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : s.cells) {
      cells.push_back({{"feature", to_string(c.feature)},
                       {"order", c.order},
                       {"auc_pr", optional_number(c.auc_pr, c.failure)},
                       {"converged", c.converged}});
    }
    nlohmann::json entry = {{"seed", s.seed},
                            {"positives", s.positives},
                            {"negatives_requested", s.negatives_requested},
                            {"negatives", s.negatives},
                            {"under_sampled", s.under_sampled},
                            {"train_size", s.train_size},
                            {"test_size", s.test_size},
                            {"failure", s.failure},
                            {"cells", cells}};
    seeds.push_back(entry);
  }
  j["seeds"] = seeds;

  nlohmann::json means = nlohmann::json::array();
  for (const auto& m : result.means) {
    means.push_back({{"feature", to_string(m.feature)},
                     {"order", m.order},
                     {"mean_auc_pr", optional_number(m.mean_auc_pr, m.failure)},
                     {"seeds_used", m.seeds_used}});
  }
  j["means"] = means;

  nlohmann::json gains = nlohmann::json::array();
  for (const auto& g : result.gains) {
    gains.push_back({{"feature", to_string(g.feature)},
                     {"from_order", g.from_order},
                     {"to_order", g.from_order + 1},
                     {"seed", g.seed ? nlohmann::json(*g.seed) : nlohmann::json(nullptr)},
                     {"gain_pct", optional_number(g.gain_pct, g.failure)}});
  }
  j["gains"] = gains;

  if (result.diagnostics) {
    j["diagnostics"] = to_json(*result.diagnostics);
  } else if (!result.diagnostics_failure.empty()) {
    j["diagnostics"] = "failed:" + result.diagnostics_failure;
  } else {
    j["diagnostics"] = nullptr;
  }

  if (include_timings) {
    nlohmann::json per_seed = nlohmann::json::object();
    for (const auto& s : result.seeds) per_seed[std::to_string(s.seed)] = s.seconds;
    j["timings"] = {{"total_seconds", result.total_seconds}, {"seed_seconds", per_seed}};
  }
  return j;
}

ExperimentResult result_from_json(const nlohmann::json& j) {
  try {
    ExperimentResult r;
    r.config = config_from_json(j.at("config"));
    const auto& ds = j.at("dataset");
    r.stats.node_count = ds.at("node_count").get<std::size_t>();
    r.stats.hyperedges = ds.at("hyperedges").get<std::size_t>();
    for (const auto& [order, count] : ds.at("projected_edges").items()) {
      r.stats.projected_edges[std::stoul(order)] = count.get<std::uint64_t>();
    }
    for (const auto& s : j.at("seeds")) {
      SeedResult seed;
      seed.seed = s.at("seed").get<std::uint64_t>();
      seed.positives = s.at("positives").get<std::size_t>();
      seed.negatives_requested = s.at("negatives_requested").get<std::size_t>();
      seed.negatives = s.at("negatives").get<std::size_t>();
      seed.under_sampled = s.at("under_sampled").get<bool>();
      seed.train_size = s.at("train_size").get<std::size_t>();
      seed.test_size = s.at("test_size").get<std::size_t>();
      seed.failure = s.at("failure").get<std::string>();
      for (const auto& c : s.at("cells")) {
        CellResult cell;
        cell.feature = parse_feature_kind(c.at("feature").get<std::string>());
        cell.order = c.at("order").get<std::size_t>();
        cell.auc_pr = read_optional_number(c.at("auc_pr"), cell.failure);
        cell.converged = c.at("converged").get<bool>();
        seed.cells.push_back(std::move(cell));
      }
      r.seeds.push_back(std::move(seed));
    }
    for (const auto& m : j.at("means")) {
      AggregateCell agg;
      agg.feature = parse_feature_kind(m.at("feature").get<std::string>());
      agg.order = m.at("order").get<std::size_t>();
      agg.mean_auc_pr = read_optional_number(m.at("mean_auc_pr"), agg.failure);
      agg.seeds_used = m.at("seeds_used").get<std::size_t>();
      r.means.push_back(std::move(agg));
    }
    for (const auto& g : j.at("gains")) {
      GainCell gain;
      gain.feature = parse_feature_kind(g.at("feature").get<std::string>());
      gain.from_order = g.at("from_order").get<std::size_t>();
      if (!g.at("seed").is_null()) gain.seed = g.at("seed").get<std::uint64_t>();
      gain.gain_pct = read_optional_number(g.at("gain_pct"), gain.failure);
      r.gains.push_back(std::move(gain));
    }
    const auto& diag = j.at("diagnostics");
    if (diag.is_object()) {
      r.diagnostics = diagnostics_from_json(diag);
    } else if (diag.is_string()) {
      std::string failure;
      read_optional_number(diag, failure);
      r.diagnostics_failure = failure;
    }
    if (j.contains("timings")) {
      const auto& t = j.at("timings");
      r.total_seconds = t.at("total_seconds").get<double>();
      for (auto& s : r.seeds) s.seconds = t.at("seed_seconds").value(std::to_string(s.seed), 0.0);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("result JSON: ") + e.what());
  }
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
  auto number_or_failure = [](const std::optional<double>& v, const std::string& failure) {
    return v ? format_double(*v) : "failed:" + sanitize(failure);
  };
  out << "row_type,seed,feature,order,auc_pr,gain_pct\n";
  for (const auto& s : result.seeds) {
    for (const auto& c : s.cells) {
      out << "cell," << s.seed << ',' << to_string(c.feature) << ',' << c.order << ','
          << number_or_failure(c.auc_pr, c.failure) << ",\n";
    }
  }
  for (const auto& m : result.means) {
    out << "mean,," << to_string(m.feature) << ',' << m.order << ','
        << number_or_failure(m.mean_auc_pr, m.failure) << ",\n";
  }
  for (const auto& g : result.gains) {
    out << (g.seed ? "seed_gain," + std::to_string(*g.seed) : std::string("gain,")) << ','
        << to_string(g.feature) << ',' << g.from_order << "->" << g.from_order + 1 << ",,"
        << number_or_failure(g.gain_pct, g.failure) << '\n';
  }
}

void emit_report(const ExperimentResult& result, ReportFormat format, const std::filesystem::path& path) {
  if (result.seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot report an empty result");
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write report to " + path.string());
  if (format == ReportFormat::kJson) {
    out << to_json(result).dump(2) << '\n';
  } else {
    write_csv(out, result);
  }
  if (!out) throw Error(ErrorCode::kIo, "failed while writing report to " + path.string());
}

}  // namespace hypex
