#pragma once

#include <stdexcept>
#include <string>

namespace aus {

// Configuration / CLI argument problems (bad values, unknown algorithm, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with input data files. Subclassed so tests can tell the
// failure modes apart.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class SchemaError : public DataError {
 public:
  explicit SchemaError(const std::string& msg) : DataError(msg) {}
};

class GapError : public DataError {
 public:
  GapError(const std::string& msg, std::size_t row) : DataError(msg), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class RangeError : public DataError {
 public:
  RangeError(const std::string& msg, std::size_t row) : DataError(msg), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// Numeric failures during training/optimization (non-finite loss, failed
// gradient verification).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Remote-data problems (transport failures, malformed responses).
class FetchError : public std::runtime_error {
 public:
  explicit FetchError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated API preconditions: programming errors, not runtime conditions.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace aus
