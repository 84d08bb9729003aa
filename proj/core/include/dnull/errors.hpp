#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnull {

/// Precondition violated by the caller (wrong ring, constant where a leader
/// is required, malformed tuple lengths, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (basis size, term count, iterations, wall time)
/// was exceeded. Never signals a wrong answer, only an incomplete one.
class ResourceCapError : public std::runtime_error {
 public:
  enum class Kind { basis_size, term_count, wall_time, iterations };

  ResourceCapError(Kind kind, std::string what, std::size_t partial_size = 0)
      : std::runtime_error(std::move(what)), kind_(kind), partial_size_(partial_size) {}

  Kind kind() const noexcept { return kind_; }
  /// Size of the partial state when the cap fired (basis length, trace length).
  std::size_t partial_size() const noexcept { return partial_size_; }

 private:
  Kind kind_;
  std::size_t partial_size_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dnull
