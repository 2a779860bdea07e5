#pragma once

// Byte-stable JSON fragments shared by the canonical writers.

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vlnaug/vec3.hpp"

namespace vlnaug::json_format {

// Fixed six-decimal rendering; negative zero prints as "0.000000" and
// non-finite values as null.
inline std::string fixed6(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

inline std::string quote(std::string_view s) {
  return nlohmann::json(std::string(s)).dump();
}

inline std::string vec3(const Vec3& v) {
  return "[" + fixed6(v.x) + ", " + fixed6(v.y) + ", " + fixed6(v.z) + "]";
}

inline std::string string_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += quote(items[i]);
  }
  return out + "]";
}

template <typename Int>
std::string int_list(const std::vector<Int>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(items[i]);
  }
  return out + "]";
}

// "[]" for no rows, otherwise one row per line with two-space indentation.
inline std::string array_of_rows(const std::vector<std::string>& rows,
                                 std::string_view indent = "") {
  if (rows.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += indent;
    out += "  ";
    out += rows[i];
    if (i + 1 < rows.size()) out += ",";
    out += "\n";
  }
  out += indent;
  out += "]";
  return out;
}

}  // namespace vlnaug::json_format
