#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vlnaug {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text. `line` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string record, const std::string& msg)
      : Error(format(line, record, msg)), line_(line), record_(std::move(record)) {}

  std::size_t line() const { return line_; }
  const std::string& record() const { return record_; }

 private:
  static std::string format(std::size_t line, const std::string& record,
                            const std::string& msg) {
    std::string out = "line " + std::to_string(line);
    if (!record.empty()) out += " (" + record + " record)";
    return out + ": " + msg;
  }

  std::size_t line_;
  std::string record_;
};

// Structured document does not match the expected schema. `path` is a
// JSON-pointer style location such as "/objects/3/center".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& msg)
      : Error(path + ": " + msg), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace vlnaug
