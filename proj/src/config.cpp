#include "vlnaug/config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <set>

#include "vlnaug/error.hpp"

namespace vlnaug {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct ValueReader {
  std::size_t line;
  std::string_view key;
  std::string_view value;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line, "config", std::string(key) + ": " + what);
  }

  double number() const {
    double v = 0.0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || p != value.data() + value.size() || !std::isfinite(v)) {
      fail("'" + std::string(value) + "' is not a number");
    }
    return v;
  }

  std::uint64_t unsigned_integer() const {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || p != value.data() + value.size()) {
      fail("'" + std::string(value) + "' is not a non-negative integer");
    }
    return v;
  }

  bool boolean() const {
    if (value == "true") return true;
    if (value == "false") return false;
    fail("'" + std::string(value) + "' is not true or false");
  }

  std::set<std::string> list() const {
    std::set<std::string> out;
    std::size_t pos = 0;
    while (pos <= value.size()) {
      std::size_t end = value.find(',', pos);
      if (end == std::string_view::npos) end = value.size();
      const auto item = trim(value.substr(pos, end - pos));
      if (!item.empty()) out.emplace(item);
      pos = end + 1;
    }
    return out;
  }

  std::string existing_path() const {
    std::string p(value);
    if (!std::filesystem::exists(p)) fail("file '" + p + "' does not exist");
    return p;
  }
};

}  // namespace

RunConfig load_config(std::string_view text) {
  RunConfig cfg;
  using Setter = std::function<void(const ValueReader&)>;
  const std::map<std::string, Setter, std::less<>> setters = {
      {"max_distance", [&](const ValueReader& r) { cfg.saliency.max_distance = r.number(); }},
      {"min_area", [&](const ValueReader& r) { cfg.saliency.min_area = r.number(); }},
      {"blacklist", [&](const ValueReader& r) { cfg.saliency.blacklist = r.list(); }},
      {"require_unique", [&](const ValueReader& r) { cfg.saliency.require_unique = r.boolean(); }},
      {"fov_half_width", [&](const ValueReader& r) { cfg.saliency.fov.half_width = r.number(); }},
      {"fov_elevation_lo", [&](const ValueReader& r) { cfg.saliency.fov.elevation_lo = r.number(); }},
      {"fov_elevation_hi", [&](const ValueReader& r) { cfg.saliency.fov.elevation_hi = r.number(); }},
      {"n", [&](const ValueReader& r) { cfg.sampler.n = r.unsigned_integer(); }},
      {"seed", [&](const ValueReader& r) { cfg.sampler.seed = r.unsigned_integer(); }},
      {"min_hops", [&](const ValueReader& r) { cfg.sampler.min_hops = r.unsigned_integer(); }},
      {"max_hops", [&](const ValueReader& r) { cfg.sampler.max_hops = r.unsigned_integer(); }},
      {"min_geodesic", [&](const ValueReader& r) { cfg.sampler.min_geodesic = r.number(); }},
      {"lambda", [&](const ValueReader& r) {
         cfg.aux.lambda = r.number();
         if (cfg.aux.lambda < 0.0) r.fail("must be >= 0");
       }},
      {"beta", [&](const ValueReader& r) {
         cfg.aux.beta = r.number();
         if (cfg.aux.beta < 0.0) r.fail("must be >= 0");
       }},
      {"top_n", [&](const ValueReader& r) {
         cfg.aux.top_n = r.unsigned_integer();
         if (cfg.aux.top_n < 1) r.fail("must be >= 1");
       }},
      {"scene", [&](const ValueReader& r) { cfg.scene = r.existing_path(); }},
      {"graph", [&](const ValueReader& r) { cfg.graph = r.existing_path(); }},
      {"lexicon", [&](const ValueReader& r) { cfg.lexicon = r.existing_path(); }},
  };

  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "config", "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) {
      throw ParseError(line_no, "config", "unknown key '" + std::string(key) + "'");
    }
    if (!seen.emplace(key).second) {
      throw ParseError(line_no, "config", "duplicate key '" + std::string(key) + "'");
    }
    it->second(ValueReader{line_no, key, value});
  }

  try {
    validate(cfg.saliency);
  } catch (const Error& e) {
    throw ParseError(0, "config", e.what());
  }
  if (cfg.sampler.min_hops > cfg.sampler.max_hops) {
    throw ParseError(0, "config", "min_hops exceeds max_hops");
  }
  if (cfg.sampler.min_geodesic < 0.0) throw ParseError(0, "config", "min_geodesic must be >= 0");
  return cfg;
}

}  // namespace vlnaug
