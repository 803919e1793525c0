#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "lmss/vertex_set.hpp"

namespace lmss {

enum class ErrorKind {
  invalid_vertex,
  too_large_for_brute_force,
  too_large_for_enumeration,
  not_a_forest,
  not_in_psi,
  not_maximum,
  accessibility_failure,
  not_perfect_tree,
  base_case,
  not_disjoint_or_not_stable,
  size_mismatch,
  invalid_family_parameter,
  syntax_error,
  self_loop,
  unknown_vertex,
  unsupported_format,
  internal_error,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the greedy chain peel when no single-vertex removal keeps the
/// current set local maximum; `stuck()` is that set.
class AccessibilityFailure : public Error {
 public:
  AccessibilityFailure(VertexSet stuck, const std::string& message)
      : Error(ErrorKind::accessibility_failure, message),
        stuck_(std::move(stuck)) {}

  const VertexSet& stuck() const noexcept { return stuck_; }

 private:
  VertexSet stuck_;
};

/// Parse failures know the 1-based input line they refer to.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lmss
