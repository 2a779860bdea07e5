#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "support.hpp"
#include "vlnaug/cli.hpp"
#include "vlnaug/config.hpp"
#include "vlnaug/error.hpp"
#include "vlnaug/render.hpp"
#include "vlnaug/supervision.hpp"

using namespace vlnaug;
namespace fs = std::filesystem;

namespace {

std::size_t config_error_line(const std::string& text) {
  try {
    load_config(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 9999;
}

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("vlnaug_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

int run(std::vector<std::string> args, std::string* err_text = nullptr) {
  args.insert(args.begin(), "vlnaug");
  std::ostringstream err;
  const int code = cli::run(args, err);
  if (err_text) *err_text = err.str();
  return code;
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("load_config") {
  const RunConfig d = load_config("");
  CHECK(d.aux.lambda == 0.5);
  CHECK(d.aux.beta == 0.3);
  CHECK(d.aux.top_n == 2);
  CHECK(d.sampler.n == 100);
  CHECK(d.sampler.seed == 42);
  CHECK(d.saliency.max_distance == 3.5);
  CHECK(d.saliency.min_area == 0.2);
  CHECK(d.saliency.require_unique);
  CHECK(d.saliency.blacklist.count("floor") == 1);
  CHECK_FALSE(d.scene.has_value());

  const RunConfig c = load_config(
      "# weights\nlambda = 0.25\n\nbeta=1\ntop_n = 3  # trailing\nblacklist = wall, floor ,\n"
      "require_unique = false\nseed = 7\n");
  CHECK(c.aux.lambda == 0.25);
  CHECK(c.aux.beta == 1.0);
  CHECK(c.aux.top_n == 3);
  CHECK(c.saliency.blacklist == std::set<std::string>{"wall", "floor"});
  CHECK_FALSE(c.saliency.require_unique);
  CHECK(c.sampler.seed == 7);

  CHECK(config_error_line("lambda = -1\n") == 1);
  CHECK(config_error_line("\nlamda = 0.5\n") == 2);
  CHECK(config_error_line("beta = 0.3\nbeta = 0.4\n") == 2);
  CHECK(config_error_line("top_n = 0\n") == 1);
  CHECK(config_error_line("seed = -3\n") == 1);
  CHECK(config_error_line("require_unique = yes\n") == 1);
  CHECK(config_error_line("just words\n") == 1);
  CHECK(config_error_line("scene = /nonexistent/file.json\n") == 1);
  CHECK(config_error_line("max_distance = 0\n") == 0);
  CHECK(config_error_line("min_hops = 9\nmax_hops = 3\n") == 0);

  const RunConfig p = load_config("scene = " + testing::kFixtures + "/small.house\n");
  CHECK(p.scene == testing::kFixtures + "/small.house");
}

TEST_CASE("render_viewpoint") {
  const SceneModel scene = testing::load_scene("grid01");
  const NavGraph graph = testing::load_graph("grid01");
  RenderSpec spec;
  spec.viewpoint = "vp_003";
  const std::string svg = render_viewpoint(scene, graph, spec);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg == render_viewpoint(scene, graph, spec));

  std::size_t arrows = 0, polys = 0;
  for (std::size_t pos = 0; (pos = svg.find("class=\"obb\"", pos)) != std::string::npos; ++pos) ++polys;
  for (std::size_t pos = 0; (pos = svg.find(" m</text>", pos)) != std::string::npos; ++pos) ++arrows;
  CHECK(arrows == graph.neighbors("vp_003").size());

  std::size_t near = 0;
  const Vec3 c = graph.viewpoint("vp_003").position;
  for (const auto& o : scene.objects) {
    if (distance(o.center, c) <= spec.radius) ++near;
  }
  CHECK(polys == near);

  spec.radius = 0.0;
  CHECK_THROWS_AS(render_viewpoint(scene, graph, spec), Error);
  spec.radius = 4.0;
  spec.viewpoint = "nope";
  CHECK_THROWS(render_viewpoint(scene, graph, spec));
}

TEST_CASE("cli exit codes and outputs") {
  const Workdir w;
  const std::string fx = testing::kFixtures;
  std::string err;

  CHECK(run({}, &err) == cli::kExitUsage);
  CHECK(run({"frobnicate"}) == cli::kExitUsage);
  CHECK(run({"--help"}) == cli::kExitOk);
  CHECK(run({"parse-scene", "--house", fx + "/small.house"}) == cli::kExitUsage);
  CHECK(run({"parse-scene", "--house", fx + "/missing.house", "--out", w / "x.json"}) ==
        cli::kExitUsage);
  CHECK(run({"parse-scene", "--house", fx + "/malformed/short_object.house", "--out", w / "x.json"},
            &err) == cli::kExitUsage);
  CHECK(err.find("line 11") != std::string::npos);

  REQUIRE(run({"parse-scene", "--house", fx + "/grid01.house", "--out", w / "scene.json"}) == 0);
  REQUIRE(run({"sample-paths", "--graph", fx + "/grid01_connectivity.json", "--n", "12", "--seed",
               "3", "--out", w / "paths.json"}) == 0);
  CHECK(read_paths_json(testing::read_text(w / "paths.json")).size() == 12);
  REQUIRE(run({"craft", "--scene", w / "scene.json", "--graph", fx + "/grid01_connectivity.json",
               "--paths", w / "paths.json", "--out", w / "r2r.json"}) == 0);
  CHECK(run({"validate", "--scene", w / "scene.json", "--graph", fx + "/grid01_connectivity.json",
             "--data", w / "r2r.json", "--out", w / "report.json"}) == cli::kExitOk);
  CHECK(testing::read_text(w / "report.json").find("\"round_trip_rate\": 1.000000") !=
        std::string::npos);

  auto records = read_r2r_json(testing::read_text(w / "r2r.json"));
  records[0].instructions[0] = "Stop there.";
  records[1].instructions[0] = "Walk sideways.";
  write(w / "bad.json", emit_r2r_json(records));
  CHECK(run({"validate", "--scene", w / "scene.json", "--graph", fx + "/grid01_connectivity.json",
             "--data", w / "bad.json", "--out", w / "bad_report.json"}) ==
        cli::kExitValidationFailed);
  const std::string bad = testing::read_text(w / "bad_report.json");
  CHECK(bad.find("\"parse_failures\": 1") != std::string::npos);
  CHECK(bad.find("\"passed\": false") != std::string::npos);

  CHECK(run({"supervise", "--scene", w / "scene.json", "--graph", fx + "/grid01_connectivity.json",
             "--data", w / "r2r.json", "--top-n", "2", "--out", w / "sup.json"}) == 0);
  CHECK(read_supervision_json(testing::read_text(w / "sup.json")).size() == 12);
  CHECK(run({"supervise", "--scene", w / "scene.json", "--graph", fx + "/grid01_connectivity.json",
             "--data", w / "r2r.json", "--instruction", "1", "--out", w / "sup.json"}) ==
        cli::kExitUsage);

  CHECK(run({"ablate", "--mode", "nouns", "--lexicon", testing::kDataDir + "/lexicon.tsv", "--data",
             w / "r2r.json", "--out", w / "abl.json"}) == 0);
  CHECK(run({"ablate", "--mode", "verbs", "--lexicon", testing::kDataDir + "/lexicon.tsv", "--data",
             w / "r2r.json", "--out", w / "abl.json"}) == cli::kExitUsage);
  CHECK(run({"ablate", "--mode", "all", "--data", w / "r2r.json", "--out", w / "abl.json"}) ==
        cli::kExitUsage);

  CHECK(run({"render", "--scene", w / "scene.json", "--graph", fx + "/grid01_connectivity.json",
             "--viewpoint", "vp_003", "--out", w / "vp.svg"}) == 0);
  CHECK(run({"render", "--scene", w / "scene.json", "--graph", fx + "/grid01_connectivity.json",
             "--viewpoint", "vp_003", "--radius", "-1", "--out", w / "vp.svg"}) == cli::kExitUsage);

  CHECK(run({"loss-check", "--instances", "20", "--out", w / "loss.json"}) == 0);
  CHECK(testing::read_text(w / "loss.json").find("\"passed\": true") != std::string::npos);
  CHECK(run({"stats", "--data", w / "r2r.json", "--out", w / "stats.json"}) == 0);
  CHECK(testing::read_text(w / "stats.json").find("\"records\": 12") != std::string::npos);

  // Inputs can come from the config file instead of flags.
  write(w / "run.cfg", "scene = " + (w / "scene.json") + "\ngraph = " + fx +
                           "/grid01_connectivity.json\nn = 5\n");
  CHECK(run({"--config", w / "run.cfg", "sample-paths", "--out", w / "cfg_paths.json"}) == 0);
  CHECK(read_paths_json(testing::read_text(w / "cfg_paths.json")).size() == 5);
  write(w / "broken.cfg", "lamda = 0.5\n");
  CHECK(run({"--config", w / "broken.cfg", "loss-check", "--out", w / "l.json"}, &err) ==
        cli::kExitUsage);
  CHECK(err.find("line 1") != std::string::npos);
}
