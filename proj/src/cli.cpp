#include "vlnaug/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "json_format.hpp"
#include "vlnaug/ablation.hpp"
#include "vlnaug/aux_loss.hpp"
#include "vlnaug/config.hpp"
#include "vlnaug/crafter.hpp"
#include "vlnaug/error.hpp"
#include "vlnaug/executor.hpp"
#include "vlnaug/nav_graph.hpp"
#include "vlnaug/render.hpp"
#include "vlnaug/scene.hpp"
#include "vlnaug/simd/kernels.hpp"
#include "vlnaug/supervision.hpp"
#include "vlnaug/text.hpp"

namespace vlnaug::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

std::string scan_from_filename(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  const std::string suffix = "_connectivity";
  if (stem.size() > suffix.size() &&
      stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
    stem.resize(stem.size() - suffix.size());
  }
  return stem;
}

std::string require(const std::string& flag_value, const std::optional<std::string>& from_config,
                    const char* flag) {
  if (!flag_value.empty()) return flag_value;
  if (from_config) return *from_config;
  throw UsageError(std::string("missing required input ") + flag);
}

struct Options {
  std::string config;
  std::string house, scene, graph, paths, data, out, lexicon, scan, viewpoint, mode;
  std::optional<std::size_t> n, min_hops, max_hops, top_n;
  std::optional<std::uint64_t> seed;
  std::optional<double> min_geodesic;
  long long first_id = 0;
  std::size_t instruction_index = 0;
  double radius = 4.0;
  int size = 800;
  std::size_t instances = 100;
  std::uint64_t check_seed = 42;
  std::size_t max_vocab = 16;
};

RunConfig load_run_config(const Options& o) {
  if (o.config.empty()) return RunConfig{};
  return load_config(read_file(o.config));
}

NavGraph load_graph(const std::string& path, const std::string& scan) {
  return parse_connectivity(read_file(path), scan.empty() ? scan_from_filename(path) : scan);
}

int cmd_parse_scene(const Options& o) {
  const SceneModel scene = parse_house(read_file(o.house));
  write_file(o.out, write_scene_json(scene));
  return kExitOk;
}

int cmd_sample_paths(const Options& o, std::ostream& err) {
  const RunConfig cfg = load_run_config(o);
  const NavGraph graph = load_graph(require(o.graph, cfg.graph, "--graph"), o.scan);
  SamplerParams params;
  params.n = o.n.value_or(cfg.sampler.n);
  params.seed = o.seed.value_or(cfg.sampler.seed);
  params.min_hops = o.min_hops.value_or(cfg.sampler.min_hops);
  params.max_hops = o.max_hops.value_or(cfg.sampler.max_hops);
  params.min_geodesic = o.min_geodesic.value_or(cfg.sampler.min_geodesic);
  const SampleResult sampled = sample_paths(graph, params);
  if (sampled.shortfall > 0) {
    err << "warning: graph supplied " << sampled.paths.size() << " of " << params.n
        << " requested paths\n";
  }
  std::vector<std::pair<long long, PathSpec>> rows;
  for (std::size_t i = 0; i < sampled.paths.size(); ++i) {
    rows.emplace_back(o.first_id + static_cast<long long>(i), sampled.paths[i]);
  }
  write_file(o.out, emit_paths_json(rows));
  return kExitOk;
}

struct World {
  SceneModel scene;
  NavGraph graph;
};

World load_world(const Options& o, const RunConfig& cfg) {
  World w;
  w.scene = read_scene_json(read_file(require(o.scene, cfg.scene, "--scene")));
  w.graph = load_graph(require(o.graph, cfg.graph, "--graph"),
                       o.scan.empty() ? w.scene.scan_id : o.scan);
  return w;
}

PathSpec gold_path(const NavGraph& graph, const std::string& scan, double heading,
                   const std::vector<std::string>& path) {
  PathSpec spec;
  spec.scan = scan;
  spec.path = path;
  spec.heading_0 = heading;
  spec.geodesic_length = graph.path_length(path);
  return spec;
}

int cmd_craft(const Options& o) {
  const RunConfig cfg = load_run_config(o);
  const World w = load_world(o, cfg);
  std::vector<DatasetRecord> records;
  for (const auto& [id, spec] : read_paths_json(read_file(o.paths))) {
    if (spec.scan != w.scene.scan_id) {
      throw UsageError("path " + std::to_string(id) + " belongs to scan '" + spec.scan + "'");
    }
    const PathSpec path = gold_path(w.graph, spec.scan, spec.heading_0, spec.path);
    const CraftedInstruction crafted = craft_instruction(w.scene, w.graph, path, cfg.saliency);
    records.push_back({id, path.scan, path.heading_0, path.path, {crafted.text},
                       path.geodesic_length});
  }
  write_file(o.out, emit_r2r_json(std::move(records)));
  return kExitOk;
}

int cmd_supervise(const Options& o) {
  const RunConfig cfg = load_run_config(o);
  const World w = load_world(o, cfg);
  const std::size_t top_n = o.top_n.value_or(cfg.aux.top_n);
  if (top_n < 1) throw UsageError("--top-n must be at least 1");
  std::vector<WordObjectSupervision> sup;
  for (const DatasetRecord& r : read_r2r_json(read_file(o.data))) {
    if (o.instruction_index >= r.instructions.size()) {
      throw UsageError("record " + std::to_string(r.path_id) + " has no instruction " +
                       std::to_string(o.instruction_index));
    }
    const PathSpec path = gold_path(w.graph, r.scan, r.heading, r.path);
    sup.push_back(build_supervision(w.scene, w.graph, path, r.instructions[o.instruction_index],
                                    cfg.saliency, top_n, r.path_id));
  }
  write_file(o.out, emit_supervision_json(std::move(sup)));
  return kExitOk;
}

int cmd_ablate(const Options& o) {
  const RunConfig cfg = load_run_config(o);
  const AblationMode mode = parse_ablation_mode(o.mode);
  const PosLexicon lex = load_lexicon(read_file(require(o.lexicon, cfg.lexicon, "--lexicon")));
  auto records = read_r2r_json(read_file(o.data));
  for (auto& r : records) {
    for (auto& text : r.instructions) text = ablate(text, mode, lex);
  }
  write_file(o.out, emit_r2r_json(std::move(records)));
  return kExitOk;
}

int cmd_validate(const Options& o) {
  using namespace json_format;
  const RunConfig cfg = load_run_config(o);
  const World w = load_world(o, cfg);
  auto records = read_r2r_json(read_file(o.data));
  std::stable_sort(records.begin(), records.end(),
                   [](const auto& a, const auto& b) { return a.path_id < b.path_id; });

  std::vector<std::string> rows;
  std::vector<NavMetrics> metrics;
  std::size_t checked = 0, round_trips = 0, parse_failures = 0;
  for (const DatasetRecord& r : records) {
    const PathSpec gold = gold_path(w.graph, r.scan, r.heading, r.path);
    for (std::size_t k = 0; k < r.instructions.size(); ++k) {
      ++checked;
      bool parsed = true, round_trip = false;
      std::string reason;
      try {
        const auto atoms = parse_crafted(r.instructions[k]);
        const auto result =
            execute(w.graph, w.scene, gold.path.front(), gold.heading_0, atoms, cfg.saliency);
        round_trip = result.stopped && result.path == gold.path;
        metrics.push_back(evaluate(w.graph, gold, result));
        if (result.failure_reason) reason = *result.failure_reason;
      } catch (const InstructionParseError& e) {
        parsed = false;
        reason = e.what();
        ++parse_failures;
      }
      if (round_trip) ++round_trips;
      std::string row = "{\"path_id\": " + std::to_string(r.path_id) +
                        ", \"instruction\": " + std::to_string(k) +
                        ", \"parsed\": " + (parsed ? "true" : "false") +
                        ", \"round_trip\": " + (round_trip ? "true" : "false");
      if (!reason.empty()) row += ", \"failure\": " + quote(reason);
      rows.push_back(row + "}");
    }
  }
  const NavMetrics mean = mean_metrics(metrics);
  const bool ok = round_trips == checked && parse_failures == 0;
  std::string report = "{\n";
  report += "  \"scan\": " + quote(w.scene.scan_id) + ",\n";
  report += "  \"instructions\": " + std::to_string(checked) + ",\n";
  report += "  \"round_trips\": " + std::to_string(round_trips) + ",\n";
  report += "  \"round_trip_rate\": " +
            fixed6(checked ? double(round_trips) / double(checked) : 1.0) + ",\n";
  report += "  \"parse_failures\": " + std::to_string(parse_failures) + ",\n";
  report += "  \"metrics\": {\"pl\": " + fixed6(mean.pl) + ", \"ne\": " + fixed6(mean.ne) +
            ", \"sr\": " + fixed6(mean.sr) + ", \"spl\": " + fixed6(mean.spl) + "},\n";
  report += "  \"passed\": " + std::string(ok ? "true" : "false") + ",\n";
  report += "  \"results\": " + array_of_rows(rows, "  ") + "\n}\n";
  write_file(o.out, report);
  return ok ? kExitOk : kExitValidationFailed;
}

int cmd_render(const Options& o) {
  const RunConfig cfg = load_run_config(o);
  const World w = load_world(o, cfg);
  RenderSpec spec;
  spec.viewpoint = o.viewpoint;
  spec.radius = o.radius;
  spec.width = spec.height = o.size;
  write_file(o.out, render_viewpoint(w.scene, w.graph, spec));
  return kExitOk;
}

int cmd_loss_check(const Options& o) {
  using namespace json_format;
  const RunConfig cfg = load_run_config(o);
  constexpr double kTolerance = 1e-6;
  constexpr double kUniformTolerance = 1e-12;
  const auto stats = aux::gradient_check(o.instances, o.check_seed, o.max_vocab, cfg.aux.lambda,
                                         cfg.aux.beta, cfg.aux.top_n);
  const bool ok = stats.max_relative_error <= kTolerance &&
                  stats.uniform_nll_max_abs_error <= kUniformTolerance;
  std::string report = "{\n";
  report += "  \"isa\": " + quote(simd::isa_name(simd::active_isa())) + ",\n";
  report += "  \"instances\": " + std::to_string(stats.instances) + ",\n";
  report += "  \"seed\": " + std::to_string(o.check_seed) + ",\n";
  report += "  \"max_vocab\": " + std::to_string(o.max_vocab) + ",\n";
  report += "  \"lambda\": " + fixed6(cfg.aux.lambda) + ",\n";
  report += "  \"beta\": " + fixed6(cfg.aux.beta) + ",\n";
  report += "  \"top_n\": " + std::to_string(cfg.aux.top_n) + ",\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", stats.max_relative_error);
  report += "  \"max_relative_error\": " + std::string(buf) + ",\n";
  std::snprintf(buf, sizeof(buf), "%.3e", stats.uniform_nll_max_abs_error);
  report += "  \"uniform_nll_max_abs_error\": " + std::string(buf) + ",\n";
  report += "  \"tolerance\": 1e-06,\n";
  report += "  \"passed\": " + std::string(ok ? "true" : "false") + "\n}\n";
  write_file(o.out, report);
  return ok ? kExitOk : kExitValidationFailed;
}

int cmd_stats(const Options& o) {
  using namespace json_format;
  const auto records = read_r2r_json(read_file(o.data));
  std::size_t instructions = 0, words = 0, hops = 0;
  double distance = 0.0;
  std::set<std::string> vocab;
  for (const auto& r : records) {
    distance += r.distance;
    hops += r.path.empty() ? 0 : r.path.size() - 1;
    for (const auto& text : r.instructions) {
      ++instructions;
      const auto tokens = tokenize(text);
      words += tokens.size();
      vocab.insert(tokens.begin(), tokens.end());
    }
  }
  const double nrec = records.empty() ? 1.0 : double(records.size());
  const double ninst = instructions == 0 ? 1.0 : double(instructions);
  std::string report = "{\n";
  report += "  \"records\": " + std::to_string(records.size()) + ",\n";
  report += "  \"instructions\": " + std::to_string(instructions) + ",\n";
  report += "  \"mean_words_per_instruction\": " + fixed6(double(words) / ninst) + ",\n";
  report += "  \"mean_path_length\": " + fixed6(distance / nrec) + ",\n";
  report += "  \"mean_hops\": " + fixed6(double(hops) / nrec) + ",\n";
  report += "  \"vocabulary_size\": " + std::to_string(vocab.size()) + "\n}\n";
  write_file(o.out, report);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& err) {
  Options o;
  CLI::App app{"Compile scene metadata and navigation graphs into VLN training data", "vlnaug"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", o.config, "key = value configuration file");

  auto* parse_scene = app.add_subcommand("parse-scene", "Parse a .house file into scene JSON");
  parse_scene->add_option("--house", o.house)->required();
  parse_scene->add_option("--out", o.out)->required();

  auto* sample = app.add_subcommand("sample-paths", "Sample shortest paths from a graph");
  sample->add_option("--graph", o.graph);
  sample->add_option("--scan", o.scan, "scan id (default: graph file name)");
  sample->add_option("--n", o.n);
  sample->add_option("--seed", o.seed);
  sample->add_option("--min-hops", o.min_hops);
  sample->add_option("--max-hops", o.max_hops);
  sample->add_option("--min-geodesic", o.min_geodesic);
  sample->add_option("--first-id", o.first_id);
  sample->add_option("--out", o.out)->required();

  auto* craft = app.add_subcommand("craft", "Craft instructions for sampled paths");
  craft->add_option("--scene", o.scene);
  craft->add_option("--graph", o.graph);
  craft->add_option("--paths", o.paths)->required();
  craft->add_option("--out", o.out)->required();

  auto* supervise = app.add_subcommand("supervise", "Per-word object supervision");
  supervise->add_option("--scene", o.scene);
  supervise->add_option("--graph", o.graph);
  supervise->add_option("--data", o.data)->required();
  supervise->add_option("--top-n", o.top_n);
  supervise->add_option("--instruction", o.instruction_index, "instruction index per record");
  supervise->add_option("--out", o.out)->required();

  auto* ablate_cmd = app.add_subcommand("ablate", "Remove nouns/adjectives from instructions");
  ablate_cmd->add_option("--mode", o.mode)
      ->required()
      ->check(CLI::IsMember({"nouns", "adjectives", "nouns_adjectives", "all"}));
  ablate_cmd->add_option("--lexicon", o.lexicon);
  ablate_cmd->add_option("--data", o.data)->required();
  ablate_cmd->add_option("--out", o.out)->required();

  auto* validate_cmd = app.add_subcommand("validate", "Round-trip crafted instructions");
  validate_cmd->add_option("--scene", o.scene);
  validate_cmd->add_option("--graph", o.graph);
  validate_cmd->add_option("--data", o.data)->required();
  validate_cmd->add_option("--out", o.out)->required();

  auto* render = app.add_subcommand("render", "Top-down SVG of one viewpoint");
  render->add_option("--scene", o.scene);
  render->add_option("--graph", o.graph);
  render->add_option("--viewpoint", o.viewpoint)->required();
  render->add_option("--radius", o.radius)->check(CLI::PositiveNumber);
  render->add_option("--size", o.size)->check(CLI::PositiveNumber);
  render->add_option("--out", o.out)->required();

  auto* loss_check = app.add_subcommand("loss-check", "Gradient check of the word losses");
  loss_check->add_option("--instances", o.instances);
  loss_check->add_option("--seed", o.check_seed);
  loss_check->add_option("--max-vocab", o.max_vocab)->check(CLI::Range(2, 1 << 16));
  loss_check->add_option("--out", o.out)->required();

  auto* stats = app.add_subcommand("stats", "Dataset token and length summary");
  stats->add_option("--data", o.data)->required();
  stats->add_option("--out", o.out)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, err, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, err, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (parse_scene->parsed()) return cmd_parse_scene(o);
    if (sample->parsed()) return cmd_sample_paths(o, err);
    if (craft->parsed()) return cmd_craft(o);
    if (supervise->parsed()) return cmd_supervise(o);
    if (ablate_cmd->parsed()) return cmd_ablate(o);
    if (validate_cmd->parsed()) return cmd_validate(o);
    if (render->parsed()) return cmd_render(o);
    if (loss_check->parsed()) return cmd_loss_check(o);
    if (stats->parsed()) return cmd_stats(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vlnaug::cli
