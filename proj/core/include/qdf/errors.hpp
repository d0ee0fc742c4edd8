#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdf {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad or contradictory configuration (unknown key, invalid value, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data: XYZ records, dataset caches, checkpoints.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Non-finite loss, degenerate coefficients, or other numerical aborts.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// One named parse failure inside an extended-XYZ stream.
class ParseError : public DataError {
 public:
  enum class Kind {
    CountMismatch,
    UnknownElement,
    NonNumericCoordinate,
    MissingPropertyColumn,
    MalformedRecord,
    DuplicateAtomPosition,
    OddElectronCount,
  };

  ParseError(Kind kind, std::size_t line, const std::string& message)
      : DataError(message), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

const char* to_string(ParseError::Kind kind);

}  // namespace qdf
