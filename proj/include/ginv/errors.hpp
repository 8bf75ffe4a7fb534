#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotNormal : std::runtime_error {
  explicit NotNormal(const std::string& what) : std::runtime_error(what) {}
};

struct NotEnumerated : std::runtime_error {
  explicit NotEnumerated(const std::string& what) : std::runtime_error(what) {}
};

struct BadPair : std::runtime_error {
  explicit BadPair(const std::string& what) : std::runtime_error(what) {}
};

struct BadQuotient : std::runtime_error {
  explicit BadQuotient(const std::string& what) : std::runtime_error(what) {}
};

struct NumericalFailure : std::runtime_error {
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& what) : std::runtime_error(what) {}
};

struct OrderMismatch : std::runtime_error {
  explicit OrderMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with position info for group files and cycle notation.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ", col " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace ginv
