#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "support.hpp"
#include "vlnaug/error.hpp"
#include "vlnaug/scene.hpp"

using namespace vlnaug;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

const char* kEmptyHeader = "H empty house 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n";

}  // namespace

TEST_CASE("small fixture parses to the declared counts") {
  const SceneModel s = testing::load_scene("small");
  CHECK(s.scan_id == "small");
  CHECK(s.regions.size() == 2);
  CHECK(s.objects.size() == 3);
  CHECK(s.categories.size() == 2);
  CHECK(s.panoramas.size() == 4);
  CHECK(s.objects[0].radii == Vec3{1.0, 0.6, 0.0});
  CHECK(s.objects[2].region_index == -1);
  CHECK(s.find_panorama("vp_002")->region_index == 1);
  CHECK(s.find_panorama("vp_999") == nullptr);
}

TEST_CASE("header with zero counts gives an empty scene") {
  const SceneModel s = parse_house(kEmptyHeader);
  CHECK(s.categories.empty());
  CHECK(s.regions.empty());
  CHECK(s.objects.empty());
  CHECK(s.panoramas.empty());
}

TEST_CASE("category names") {
  const SceneModel s = testing::load_scene("small");
  CHECK(category_name(s, 0) == "painting");
  CHECK(category_name(s, 1) == "chest of drawers");
  CHECK(s.categories[1].mpcat40_name == "chest_of_drawers");
  CHECK_THROWS_AS(category_name(s, 3), Error);
  CHECK_THROWS_AS(category_name(s, -1), Error);
}

TEST_CASE("category names are lowercased and underscore runs collapse") {
  const std::string text =
      "H x house 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0\n"
      "C 0 1 Coffee__Table 5 table 0 0 0 0 0\n";
  CHECK(parse_house(text).categories[0].name == "coffee table");
}

TEST_CASE("head noun") {
  CHECK(head_noun("chest of drawers") == "drawers");
  CHECK(head_noun("bed") == "bed");
  CHECK(head_noun("  coffee table  ") == "table");
  CHECK_THROWS_AS(head_noun("   "), Error);
  CHECK_THROWS_AS(head_noun(""), Error);
}

TEST_CASE("malformed fixtures report the faulty line and record") {
  const auto manifest = split_lines(testing::read_text(testing::kFixtures + "/malformed/manifest.tsv"));
  REQUIRE(manifest.size() == 10);
  for (const auto& row : manifest) {
    std::istringstream in(row);
    std::string file, record;
    std::size_t line = 0;
    in >> file >> line >> record;
    CAPTURE(file);
    try {
      parse_house(testing::read_text(testing::kFixtures + "/malformed/" + file));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.record() == record);
    }
  }
}

TEST_CASE("header must come first") {
  const auto lines = split_lines(testing::read_text(testing::kFixtures + "/small.house"));
  std::vector<std::string> moved(lines.begin() + 1, lines.end());
  moved.push_back(lines[0]);
  try {
    parse_house(join_lines(moved));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
}

TEST_CASE("padding tokens must be numeric") {
  auto lines = split_lines(testing::read_text(testing::kFixtures + "/small.house"));
  lines[4] = "C 0 100 painting 4 picture 0 0 0 0 zero";
  CHECK_THROWS_AS(parse_house(join_lines(lines)), ParseError);
}

TEST_CASE("record order after the header does not matter") {
  const std::string text = testing::read_text(testing::kFixtures + "/grid01.house");
  const SceneModel reference = parse_house(text);
  auto lines = split_lines(text);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(lines.begin() + 1, lines.end(), rng);
    CHECK(parse_house(join_lines(lines)) == reference);
  }
}

TEST_CASE("bundled fixtures parse and satisfy the OBB invariants") {
  for (const auto& scan : {"grid01", "house02", "tilted03", "bedroom", "small"}) {
    CAPTURE(scan);
    const SceneModel s = testing::load_scene(scan);
    validate_scene(s);
    for (const auto& o : s.objects) {
      CHECK(std::abs(o.axis0.norm() - 1.0) <= 1e-3);
      CHECK(std::abs(o.axis1.norm() - 1.0) <= 1e-3);
      CHECK(std::abs(o.axis0.dot(o.axis1)) <= 1e-3);
    }
  }
}

TEST_CASE("scene JSON round trip") {
  SUBCASE("empty scene") {
    const SceneModel empty = parse_house(kEmptyHeader);
    const std::string json = write_scene_json(empty);
    CHECK(json.find("\"objects\": []") != std::string::npos);
    CHECK(read_scene_json(json) == empty);
  }
  SUBCASE("fixtures are exact fixed points") {
    for (const auto& scan : {"grid01", "house02", "tilted03", "small"}) {
      CAPTURE(scan);
      const SceneModel s = testing::load_scene(scan);
      const std::string once = write_scene_json(s);
      const SceneModel back = read_scene_json(once);
      CHECK(back == s);
      CHECK(write_scene_json(back) == once);
    }
  }
}

TEST_CASE("scene JSON schema errors name the path") {
  const std::string json = write_scene_json(testing::load_scene("small"));
  SUBCASE("missing objects key") {
    auto doc = json;
    const auto start = doc.find("  \"objects\"");
    const auto end = doc.find("  \"panoramas\"");
    doc.erase(start, end - start);
    try {
      read_scene_json(doc);
      FAIL("expected a schema error");
    } catch (const SchemaError& e) {
      CHECK(e.path() == "/objects");
    }
  }
  SUBCASE("unknown key") {
    auto doc = json;
    doc.replace(doc.find("\"mapping_index\""), 15, "\"mapping_idx\"");
    CHECK_THROWS_AS(read_scene_json(doc), SchemaError);
  }
  SUBCASE("wrong type") {
    auto doc = json;
    doc.replace(doc.find("\"scan_id\": \"small\""), 18, "\"scan_id\": 3");
    try {
      read_scene_json(doc);
      FAIL("expected a schema error");
    } catch (const SchemaError& e) {
      CHECK(e.path() == "/scan_id");
    }
  }
}

// Random files from the documented grammar always parse, with the declared
// counts.
TEST_CASE("generated house files parse") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> radius(0.0, 1.5);
  char buf[512];
  for (int trial = 0; trial < 50; ++trial) {
    const int nl = 1 + trial % 2, nr = 1 + trial % 4, nc = 1 + trial % 5, np = trial % 6,
              no = trial % 9;
    std::vector<std::string> lines;
    std::snprintf(buf, sizeof buf, "H gen%d house 0 %d 0 0 0 %d %d %d 0 %d 0 0 0 0 0", trial, np,
                  no, nc, nr, nl);
    lines.emplace_back(buf);
    for (int l = 0; l < nl; ++l) {
      std::snprintf(buf, sizeof buf, "L %d 0 0 0 0 0 -1 -1 -1 1 1 1 0 0 0 0 0", l);
      lines.emplace_back(buf);
    }
    for (int r = 0; r < nr; ++r) {
      std::snprintf(buf, sizeof buf, "R %d %d 0 0 r %.4f %.4f 1 -6 -6 0 6 6 3 0 0 0 0 0", r,
                    r % nl, coord(rng), coord(rng));
      lines.emplace_back(buf);
    }
    for (int c = 0; c < nc; ++c) {
      std::snprintf(buf, sizeof buf, "C %d %d cat_%d 1 misc 0 0 0 0 0", c, c, c);
      lines.emplace_back(buf);
    }
    for (int p = 0; p < np; ++p) {
      std::snprintf(buf, sizeof buf, "P pano_%d %d %d 0 %.4f %.4f 1.5 0 0 0 0 0", p, p,
                    p % (nr + 1) - 1, coord(rng), coord(rng));
      lines.emplace_back(buf);
    }
    for (int o = 0; o < no; ++o) {
      const double a = angle(rng);
      std::snprintf(buf, sizeof buf,
                    "O %d %d %d %.6f %.6f %.6f %.9f %.9f 0 %.9f %.9f 0 %.4f %.4f %.4f 0 0 0 0 0 0 0 0",
                    o, o % (nr + 1) - 1, o % nc, coord(rng), coord(rng), coord(rng), std::cos(a),
                    std::sin(a), -std::sin(a), std::cos(a), radius(rng), radius(rng), radius(rng));
      lines.emplace_back(buf);
    }
    std::shuffle(lines.begin() + 1, lines.end(), rng);
    const SceneModel s = parse_house(join_lines(lines));
    CHECK(s.objects.size() == static_cast<std::size_t>(no));
    CHECK(s.panoramas.size() == static_cast<std::size_t>(np));
    CHECK(s.categories.size() == static_cast<std::size_t>(nc));
    CHECK(s.regions.size() == static_cast<std::size_t>(nr));
  }
}
