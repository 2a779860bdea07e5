// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "support.hpp"
#include "vlnaug/ablation.hpp"
#include "vlnaug/aux_loss.hpp"
#include "vlnaug/cli.hpp"
#include "vlnaug/crafter.hpp"
#include "vlnaug/error.hpp"
#include "vlnaug/executor.hpp"
#include "vlnaug/simd/kernels.hpp"
#include "vlnaug/supervision.hpp"
#include "vlnaug/text.hpp"

using namespace vlnaug;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1: every sampled path survives craft, parse and execute unchanged.
Outcome round_trip_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const SaliencyConfig cfg;
  std::size_t total = 0, ok = 0;
  for (const auto& scan : testing::fixture_scans()) {
    const SceneModel scene = testing::load_scene(scan);
    const NavGraph graph = testing::load_graph(scan);
    SamplerParams params;
    params.n = 70;
    params.seed = 42;
    for (const auto& path : sample_paths(graph, params).paths) {
      ++total;
      try {
        const auto crafted = craft_instruction(scene, graph, path, cfg);
        const auto r = execute(graph, scene, path.path.front(), path.heading_0,
                               parse_crafted(crafted.text), cfg);
        if (r.stopped && r.path == path.path) ++ok;
      } catch (const Error&) {
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {total >= 200 && ok == total && secs < 10.0,
          std::to_string(ok) + "/" + std::to_string(total) + " paths over " +
              std::to_string(testing::fixture_scans().size()) + " scenes in " +
              fmt("%.2f", secs) + " s"};
}

// 2: render then parse is the identity on every atom.
Outcome grammar_bijection() {
  const std::vector<std::string> categories{
      "painting", "table", "sofa", "bed", "closet", "toilet", "chest of drawers",
      "coffee table", "lamp", "mirror", "plant", "sink", "bathtub", "armchair", "tv stand",
      "stool", "cabinet", "washing machine", "fireplace", "kitchen counter"};
  std::size_t total = 0, ok = 0;
  const auto stop = make_atom(Turn::kNone, Motion::kStop, std::nullopt);
  auto check = [&](const AtomicInstruction& atom, bool is_stop) {
    ++total;
    try {
      const auto parsed = parse_crafted(is_stop ? join_clauses({atom}) : join_clauses({atom, stop}));
      if (!parsed.empty() && parsed.front() == atom) ++ok;
    } catch (const Error&) {
    }
  };
  std::vector<std::optional<ObjectRef>> refs{std::nullopt};
  for (const auto& c : categories) {
    for (Relation r : {Relation::kLeft, Relation::kRight, Relation::kToward}) refs.push_back(ObjectRef{c, r});
  }
  for (Turn t : {Turn::kNone, Turn::kLeft, Turn::kRight, Turn::kAround}) {
    for (Motion m : {Motion::kWalkStraight, Motion::kGoUp, Motion::kGoDown}) {
      for (const auto& ref : refs) check(make_atom(t, m, ref), false);
    }
  }
  const std::size_t moving = total;
  for (const auto& ref : refs) check(make_atom(Turn::kNone, Motion::kStop, ref), true);
  return {moving == 4 * 3 * 61 && ok == total,
          std::to_string(ok) + "/" + std::to_string(total) + " atoms (" +
              std::to_string(moving) + " moving, " + std::to_string(total - moving) + " stop)"};
}

// 3: Dijkstra against exhaustive enumeration on small random graphs.
Outcome shortest_path_oracle() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::size_t pairs = 0, ok = 0;
  for (int g = 0; g < 25; ++g) {
    const std::size_t n = 2 + rng() % 7;
    const double density = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    std::vector<Viewpoint> vps;
    for (std::size_t i = 0; i < n; ++i) {
      vps.push_back({"n" + std::to_string(i), {coord(rng), coord(rng), coord(rng) * 0.2}, 1.5, true});
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (static_cast<double>(rng() % 1000) / 1000.0 < density) {
          edges.emplace_back(i, j);
          w[i][j] = w[j][i] = distance(vps[i].position, vps[j].position);
        }
      }
    }
    const NavGraph graph("rand" + std::to_string(g), vps, edges);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        ++pairs;
        const double oracle = testing::brute_force_min_cost(w, a, b);
        const auto path = shortest_path(graph, vps[a].id, vps[b].id);
        if (!std::isfinite(oracle)) {
          if (!path) ++ok;
        } else if (path && path->geodesic_length == oracle &&
                   graph.path_length(path->path) == oracle) {
          ++ok;
        }
      }
    }
  }
  return {ok == pairs, std::to_string(ok) + "/" + std::to_string(pairs) +
                           " node pairs exact over 25 graphs"};
}

// 4: analytic gradients against central differences.
Outcome gradient_check() {
  const auto stats = aux::gradient_check(100, 42, 16, 0.5, 0.3, 2);
  return {stats.instances == 100 && stats.max_relative_error <= 1e-6 &&
              stats.uniform_nll_max_abs_error <= 1e-12,
          "max relative error " + fmt("%.3e", stats.max_relative_error) +
              " (tol 1e-6), uniform NLL error " + fmt("%.3e", stats.uniform_nll_max_abs_error) +
              " (tol 1e-12), isa " + simd::isa_name(simd::active_isa())};
}

// 5: alignment shape over every (L, K) up to 40.
Outcome alignment_properties() {
  std::size_t cases = 0, ok = 0;
  for (std::size_t L = 1; L <= 40; ++L) {
    for (std::size_t K = 1; K <= 40; ++K) {
      ++cases;
      const auto a = align_words_to_nodes(L, K);
      bool good = a.size() == L && a.front() == 0 && (L < 2 || a.back() == K - 1);
      for (std::size_t i = 1; good && i < L; ++i) good = a[i] >= a[i - 1] && a[i] < K;
      if (good) ++ok;
    }
  }
  const bool example = align_words_to_nodes(5, 3) == std::vector<std::size_t>{0, 1, 1, 2, 2};
  return {ok == cases && example, std::to_string(ok) + "/" + std::to_string(cases) +
                                      " (L, K) pairs, L=5 K=3 example " +
                                      (example ? "matches" : "differs")};
}

// 6: two pipeline runs through the CLI give identical bytes.
Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / ("vlnaug_acceptance_" + std::to_string(::getpid()));
  const std::string fx = testing::kFixtures;
  const std::string graph = fx + "/house02_connectivity.json";
  std::vector<std::string> outputs[2];
  bool ran = true;
  for (int k = 0; k < 2; ++k) {
    const fs::path dir = root / ("run" + std::to_string(k));
    fs::create_directories(dir);
    auto p = [&](const char* name) { return (dir / name).string(); };
    std::ostringstream err;
    const std::vector<std::vector<std::string>> steps{
        {"vlnaug", "parse-scene", "--house", fx + "/house02.house", "--out", p("scene.json")},
        {"vlnaug", "sample-paths", "--graph", graph, "--n", "60", "--seed", "42", "--out", p("paths.json")},
        {"vlnaug", "craft", "--scene", p("scene.json"), "--graph", graph, "--paths", p("paths.json"),
         "--out", p("r2r.json")},
        {"vlnaug", "supervise", "--scene", p("scene.json"), "--graph", graph, "--data", p("r2r.json"),
         "--out", p("sup.json")},
        {"vlnaug", "render", "--scene", p("scene.json"), "--graph", graph, "--viewpoint", "vp_032",
         "--out", p("vp.svg")},
    };
    for (const auto& s : steps) ran &= cli::run(s, err) == cli::kExitOk;
    if (!ran) break;
    for (const char* f : {"r2r.json", "sup.json", "vp.svg"}) outputs[k].push_back(testing::read_text(p(f)));
  }
  fs::remove_all(root);
  std::size_t bytes = 0;
  for (const auto& s : outputs[0]) bytes += s.size();
  const bool same = ran && outputs[0] == outputs[1];
  return {same, ran ? std::to_string(bytes) + " bytes across R2R, supervision and SVG " +
                          (same ? "identical" : "differ")
                    : std::string("pipeline step failed")};
}

// Declared counts in a .house header: panoramas, objects, categories, regions.
std::vector<std::size_t> header_counts(const std::string& text) {
  std::istringstream line(text.substr(0, text.find('\n')));
  std::vector<std::string> tok;
  for (std::string t; line >> t;) tok.push_back(t);
  return {std::stoul(tok.at(4)), std::stoul(tok.at(8)), std::stoul(tok.at(9)), std::stoul(tok.at(10))};
}

// 7: fixtures parse to their declared counts; malformed lines are named.
Outcome parser_conformance() {
  std::size_t scenes = 0, scenes_ok = 0;
  for (const std::string scan : {"grid01", "house02", "tilted03", "small", "bedroom"}) {
    ++scenes;
    const std::string text = testing::read_text(testing::kFixtures + "/" + scan + ".house");
    const SceneModel s = parse_house(text);
    const std::vector<std::size_t> got{s.panoramas.size(), s.objects.size(), s.categories.size(),
                                       s.regions.size()};
    if (got == header_counts(text)) ++scenes_ok;
  }
  std::istringstream manifest(testing::read_text(testing::kFixtures + "/malformed/manifest.tsv"));
  std::size_t cases = 0, cases_ok = 0;
  for (std::string file, line, record; manifest >> file >> line >> record;) {
    ++cases;
    try {
      parse_house(testing::read_text(testing::kFixtures + "/malformed/" + file));
    } catch (const ParseError& e) {
      if (e.line() == std::stoul(line) && e.record() == record) ++cases_ok;
    }
  }
  return {scenes_ok == scenes && cases == 10 && cases_ok == cases,
          std::to_string(scenes_ok) + "/" + std::to_string(scenes) + " fixtures match counts, " +
              std::to_string(cases_ok) + "/" + std::to_string(cases) + " malformed lines named"};
}

// 8: ablation is idempotent, keeps token order and empties under `all`.
Outcome ablation_properties() {
  const std::string lex_text = testing::read_text(testing::kDataDir + "/lexicon.tsv");
  const PosLexicon lex = load_lexicon(lex_text);
  std::vector<std::string> words;
  {
    std::istringstream in(lex_text);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) words.push_back(line.substr(0, line.find('\t')));
    }
  }
  words.insert(words.end(), {"Walk", "Turn", "LEFT,", "stop.", "qwzx", "the", "Go!"});
  std::mt19937 rng(42);
  std::size_t ok = 0;
  const std::size_t total = 1000;
  for (std::size_t i = 0; i < total; ++i) {
    std::string s;
    const std::size_t n = 1 + rng() % 25;
    for (std::size_t k = 0; k < n; ++k) s += words[rng() % words.size()] + (rng() % 5 ? " " : ", ");
    const auto full = tokenize(s);
    bool good = ablate(s, AblationMode::kAll, lex).empty();
    for (AblationMode m : {AblationMode::kNouns, AblationMode::kAdjectives,
                           AblationMode::kNounsAdjectives, AblationMode::kAll}) {
      const std::string once = ablate(s, m, lex);
      good &= ablate(once, m, lex) == once;
      const auto kept = tokenize(once);
      std::size_t j = 0;
      for (const auto& t : full) if (j < kept.size() && kept[j] == t) ++j;
      good &= j == kept.size();
    }
    if (good) ++ok;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " generated instructions"};
}

// 9: metric identities on gold executions and a double-length detour.
Outcome metrics_identities() {
  std::size_t cases = 0, ok = 0;
  for (const auto& scan : testing::fixture_scans()) {
    const NavGraph graph = testing::load_graph(scan);
    for (const auto& path : sample_paths(graph, {30, 9}).paths) {
      ++cases;
      const auto m = evaluate(graph, path, {path.path, path.heading_0, true, std::nullopt});
      if (m.ne == 0.0 && m.sr == 1.0 && m.spl == 1.0) ++ok;
    }
  }
  const NavGraph line("line",
                      {{"a", {0, 0, 0}, 1.5, true}, {"b", {0, 1, 0}, 1.5, true}, {"c", {0, 2, 0}, 1.5, true}},
                      {{0, 1}, {1, 2}});
  const PathSpec gold{"line", {"a", "b", "c"}, 0.0, 2.0};
  const auto m = evaluate(line, gold, {{"a", "b", "a", "b", "c"}, 0.0, true, std::nullopt});
  ++cases;
  const bool detour = m.sr == 1.0 && m.pl == 4.0 && m.spl == 0.5;
  if (detour) ++ok;
  return {ok == cases, std::to_string(ok) + "/" + std::to_string(cases) +
                           " cases, double-length spl " + fmt("%.6f", m.spl)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"round-trip oracle", round_trip_oracle},
      {"grammar bijection", grammar_bijection},
      {"shortest-path oracle", shortest_path_oracle},
      {"gradient check", gradient_check},
      {"alignment properties", alignment_properties},
      {"determinism", determinism},
      {"parser conformance", parser_conformance},
      {"ablation properties", ablation_properties},
      {"metrics identities", metrics_identities},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
