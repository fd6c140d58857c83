#pragma once

#include <stdexcept>
#include <string>

namespace marlgpt {

// API misuse: wrong shapes, invalid action ids, non-scalar backward roots.
struct UsageError : std::logic_error {
  explicit UsageError(const std::string& msg) : std::logic_error(msg) {}
};

// Bad run configuration: token budget overflow, unsatisfiable placement,
// unregistered schema, quota mismatch. CLI exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent data: schema/record mismatch, corrupt shard,
// expert action invalid under its stored mask. CLI exit code 3.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf detected where finite values are required.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace marlgpt
