#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypex/diagnostics.hpp"
#include "hypex/error.hpp"
#include "hypex/experiment.hpp"
#include "hypex/seeding.hpp"
#include "hypex/synthetic.hpp"
#include "json.hpp"

namespace hypex::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::uint64_t parse_u64(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw Error(ErrorCode::kConfig, "expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

// "1,2,5" or "1-10" or a mix of both.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (const auto& part : split_list(text)) {
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      seeds.push_back(parse_u64(part));
      continue;
    }
    const auto lo = parse_u64(part.substr(0, dash));
    const auto hi = parse_u64(part.substr(dash + 1));
    if (hi < lo) throw Error(ErrorCode::kConfig, "empty seed range '" + part + "'");
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw Error(ErrorCode::kConfig, "no seeds given");
  return seeds;
}

struct DatasetArgs {
  std::string path;
  std::string format = "auto";
  std::size_t max_size = kDefaultMaxHyperedgeSize;

  void add_to(CLI::App* cmd) {
    cmd->add_option("dataset", path, "Edge-list file or simplicial dataset prefix")->required();
    cmd->add_option("--format", format, "simplicial | edgelist | auto");
    cmd->add_option("--max-size", max_size, "Drop hyperedges with more nodes than this");
  }

  DatasetFormat resolved_format() const {
    if (format != "auto") return parse_dataset_format(format);
    const std::string p = path;
    if (p.ends_with("-nverts.txt") || std::filesystem::exists(p + "-nverts.txt")) {
      return DatasetFormat::kSimplicial;
    }
    return DatasetFormat::kEdgeList;
  }

  Hypergraph load() const { return load_hypergraph(path, resolved_format(), max_size); }
};

std::string dataset_stem(const std::string& path) {
  std::string stem = std::filesystem::path(path).filename().string();
  constexpr std::string_view kSuffix = "-nverts.txt";
  if (stem.ends_with(kSuffix)) stem.resize(stem.size() - kSuffix.size());
  return std::filesystem::path(stem).stem().string();
}

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << nlohmann::json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperedge prediction with n-projected graphs", "hypex"};
  app.require_subcommand(1);

  // stats
  DatasetArgs stats_data;
  std::size_t stats_order = 4;
  std::uint64_t max_subsets = ProjectionOptions{}.max_subsets;
  bool stats_json = false;
  auto* stats = app.add_subcommand("stats", "Unique hyperedges and projected edge counts per order");
  stats_data.add_to(stats);
  stats->add_option("--max-order", stats_order, "Largest projection order to count")->check(CLI::Range(2, 10));
  stats->add_option("--max-subsets", max_subsets, "Projection memory guard (active subsets)");
  stats->add_flag("--json", stats_json, "Print JSON instead of a table");

  // project
  DatasetArgs project_data;
  std::size_t project_order = 4;
  std::string project_cache;
  auto* proj = app.add_subcommand("project", "Write projected-graph cache files for orders 2..n");
  project_data.add_to(proj);
  proj->add_option("--max-order", project_order, "Largest projection order")->check(CLI::Range(2, 10));
  proj->add_option("--cache-dir", project_cache, "Output directory")->required();
  proj->add_option("--max-subsets", max_subsets, "Projection memory guard (active subsets)");

  // run
  std::string config_path, dataset, format, features, neg_type, seeds, out_path, report_format, cache_dir;
  std::size_t target_size = 0, max_order = 0, ratio = 0;
  double retain = 0.0, train_frac = 0.0;
  bool strict_stars = false, no_diagnostics = false;
  auto* run_cmd = app.add_subcommand("run", "Full hyperedge-prediction experiment");
  run_cmd->add_option("--config", config_path, "JSON experiment config");
  run_cmd->add_option("--dataset", dataset, "Dataset path");
  run_cmd->add_option("--format", format, "simplicial | edgelist");
  run_cmd->add_option("--target-size", target_size, "Candidate hyperedge size");
  run_cmd->add_option("--max-order", max_order, "Largest expansion order");
  run_cmd->add_option("--features", features, "Comma-separated subset of GM,HM,AM,CN,JC,AA");
  run_cmd->add_option("--neg-type", neg_type, "star | clique");
  run_cmd->add_option("--ratio", ratio, "Negatives per positive");
  run_cmd->add_option("--retain", retain, "Fraction of hyperedges kept in E'");
  run_cmd->add_option("--train-frac", train_frac, "Train share of the candidate set");
  run_cmd->add_option("--seeds", seeds, "Seed list, e.g. 1,2,3 or 1-10");
  run_cmd->add_option("--out", out_path, "Report path");
  run_cmd->add_option("--report-format", report_format, "json | csv (default: from --out extension)");
  run_cmd->add_option("--cache-dir", cache_dir, "Projected-graph cache directory");
  run_cmd->add_flag("--strict-stars", strict_stars, "Star leaves must be pairwise non-adjacent");
  run_cmd->add_flag("--no-diagnostics", no_diagnostics, "Skip the diagnostics block");

  // diagnose
  DatasetArgs diag_data;
  std::uint64_t samples = 1'000'000, diag_seed = 1;
  bool unsorted = false;
  std::string diag_out;
  auto* diag = app.add_subcommand("diagnose", "3-pg edge density, I(W3;W2) and H(W3|W2)");
  diag_data.add_to(diag);
  diag->add_option("--samples", samples, "Number of sampled node triples");
  diag->add_option("--seed", diag_seed, "Sampling seed");
  diag->add_flag("--unsorted", unsorted, "Keep W2 components in sampling order");
  diag->add_option("--out", diag_out, "Write the JSON report here instead of stdout");
  diag->add_option("--max-subsets", max_subsets, "Projection memory guard (active subsets)");

  // correlate
  std::string gain_spec, stat_name;
  std::vector<std::string> result_files;
  auto* corr = app.add_subcommand("correlate", "Pearson correlation of a gain column with a diagnostic across reports");
  corr->add_option("--gain", gain_spec, "FEATURE:ORDER, e.g. CN:2 for the 2->3 gain")->required();
  corr->add_option("--stat", stat_name, "edge_density_pct | mutual_information_bits | conditional_entropy_bits")->required();
  corr->add_option("reports", result_files, "JSON result files")->required();

  // synth
  std::uint64_t synth_seed = 1;
  std::string synth_out;
  PlantedConfig planted;
  auto* synth = app.add_subcommand("synth", "Write a planted-triple synthetic dataset as an edge list");
  synth->add_option("--seed", synth_seed, "Generator seed");
  synth->add_option("--out", synth_out, "Output edge-list path")->required();
  synth->add_option("--nodes", planted.nodes, "Node count");
  synth->add_option("--triples", planted.planted_triples, "Planted triples");
  synth->add_option("--extended", planted.extended, "Size-4 hyperedges built on planted triples");
  synth->add_option("--background", planted.background, "Random size-2/3 hyperedges");

  std::vector<std::string> argv_storage = args;
  argv_storage.insert(argv_storage.begin(), "hypex");
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage_error", e.what());
    return 2;
  }

  try {
    ProjectionOptions projection;
    projection.max_subsets = max_subsets;

    if (*stats) {
      const auto hg = stats_data.load();
      nlohmann::json report = {{"dataset", stats_data.path},
                               {"nodes", hg.node_count()},
                               {"hyperedges", hg.edge_count()}};
      nlohmann::json orders = nlohmann::json::object();
      for (std::size_t k = 2; k <= stats_order; ++k) {
        try {
          orders[std::to_string(k)] = project(hg, k, projection).edge_count();
        } catch (const Error& e) {
          orders[std::to_string(k)] = "failed:" + std::string(to_string(e.code())) + ": " + e.what();
        }
      }
      report["projected_edges"] = orders;
      if (stats_json) {
        out << report.dump(2) << '\n';
      } else {
        out << "dataset\t|E|";
        for (std::size_t k = 2; k <= stats_order; ++k) out << "\t|E_" << k << '|';
        out << '\n' << stats_data.path << '\t' << hg.edge_count();
        for (std::size_t k = 2; k <= stats_order; ++k) {
          const auto& v = orders[std::to_string(k)];
          out << '\t' << (v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::uint64_t>()));
        }
        out << '\n';
      }
      return 0;
    }

    if (*proj) {
      const auto hg = project_data.load();
      for (std::size_t k = 2; k <= project_order; ++k) {
        const auto path = cache_path(hg, k, project_cache, dataset_stem(project_data.path));
        const auto pg = load_or_project(hg, k, project_cache, dataset_stem(project_data.path), projection);
        out << path.string() << '\t' << pg.subset_count() << " subsets\n";
      }
      return 0;
    }

    if (*run_cmd) {
      ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
      if (!dataset.empty()) cfg.dataset = dataset;
      if (!format.empty()) cfg.format = parse_dataset_format(format);
      if (target_size != 0) cfg.target_size = target_size;
      if (max_order != 0) cfg.max_order = max_order;
      if (!features.empty()) {
        cfg.features.clear();
        for (const auto& f : split_list(features)) cfg.features.push_back(parse_feature_kind(f));
      }
      if (!neg_type.empty()) cfg.neg_type = parse_negative_type(neg_type);
      if (ratio != 0) cfg.multiplier = ratio;
      if (retain != 0.0) cfg.retain_frac = retain;
      if (train_frac != 0.0) cfg.train_frac = train_frac;
      if (!seeds.empty()) cfg.seeds = parse_seeds(seeds);
      if (!out_path.empty()) cfg.output = out_path;
      if (!report_format.empty()) {
        cfg.output_format = parse_report_format(report_format);
      } else if (!out_path.empty()) {
        cfg.output_format = out_path.ends_with(".csv") ? ReportFormat::kCsv : ReportFormat::kJson;
      }
      if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
      if (strict_stars) cfg.strict_stars = true;
      if (no_diagnostics) cfg.diagnostics = false;
      if (cfg.dataset.empty()) throw Error(ErrorCode::kConfig, "no dataset given (--dataset or config key 'dataset')");

      const auto result = run_experiment(cfg);
      if (cfg.output) {
        emit_report(result, cfg.output_format, *cfg.output);
      } else {
        out << to_json(result).dump(2) << '\n';
        return 0;
      }
      out << std::fixed << std::setprecision(4);
      for (const auto& m : result.means) {
        out << to_string(m.feature) << "\torder " << m.order << "\tmean AUC-PR ";
        if (m.mean_auc_pr) {
          out << *m.mean_auc_pr;
        } else {
          out << "failed: " << m.failure;
        }
        out << '\n';
      }
      out << "report written to " << cfg.output->string() << '\n';
      return 0;
    }

    if (*diag) {
      const auto hg = diag_data.load();
      TripleSamplingOptions options;
      options.sort_w2 = !unsorted;
      const auto pg2 = project(hg, 2, projection);
      const auto pg3 = project(hg, 3, projection);
      const auto report = compute_diagnostics(pg2, pg3, hg.node_count(), samples, diag_seed, options);
      const auto text = to_json(report).dump(2);
      if (diag_out.empty()) {
        out << text << '\n';
      } else {
        std::ofstream f(diag_out);
        if (!f) throw Error(ErrorCode::kIo, "cannot write " + diag_out);
        f << text << '\n';
      }
      return 0;
    }

    if (*corr) {
      const auto colon = gain_spec.find(':');
      if (colon == std::string::npos) throw Error(ErrorCode::kConfig, "--gain must look like FEATURE:ORDER");
      const auto feature = parse_feature_kind(gain_spec.substr(0, colon));
      const auto from_order = static_cast<std::size_t>(parse_u64(gain_spec.substr(colon + 1)));
      std::vector<double> gains, stats_values;
      for (const auto& file : result_files) {
        std::ifstream in(file);
        if (!in) throw Error(ErrorCode::kIo, "cannot open report " + file);
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
          throw Error(ErrorCode::kParse, file + ": " + e.what());
        }
        const auto result = result_from_json(j);
        const auto* g = result.gain(feature, from_order);
        if (g == nullptr || !g->gain_pct) throw Error(ErrorCode::kInvalidArgument, file + " has no usable gain " + gain_spec);
        if (!result.diagnostics) throw Error(ErrorCode::kInvalidArgument, file + " has no diagnostics block");
        const auto dj = to_json(*result.diagnostics);
        if (!dj.contains(stat_name) || stat_name == "num_samples" || stat_name == "seed") {
          throw Error(ErrorCode::kConfig, "unknown diagnostics column '" + stat_name + "'");
        }
        gains.push_back(*g->gain_pct);
        stats_values.push_back(dj[stat_name].get<double>());
      }
      out << nlohmann::json{{"gain", gain_spec},
                            {"stat", stat_name},
                            {"reports", result_files.size()},
                            {"pearson", pearson(stats_values, gains)}}
                 .dump(2)
          << '\n';
      return 0;
    }

    if (*synth) {
      const auto raw = planted_dataset(planted, synth_seed);
      std::ofstream f(synth_out);
      if (!f) throw Error(ErrorCode::kIo, "cannot write " + synth_out);
      write_edge_list(f, raw);
      out << raw.edges.size() << " hyperedges written to " << synth_out << '\n';
      return 0;
    }
  } catch (const Error& e) {
    write_error(err, to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    write_error(err, "internal_error", e.what());
    return 1;
  }
  return 0;
}

}  // namespace hypex::cli
