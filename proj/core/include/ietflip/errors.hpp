#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ietflip {

/// Failure kinds raised by the library's domain checks.
enum class Errc {
  overlap,
  not_bijective,
  bad_lengths,
  not_orientation_preserving,
  bound_exceeded,
  class_not_identity,
  precondition,
  structure,
  length_mismatch,
  bad_parameters,
  degenerate_triple,
  field_mismatch,
};

/// Stable machine-readable name, e.g. "not-bijective".
const char* errc_name(Errc k);

/// Thrown when an operation's mathematical preconditions or invariants fail.
class DomainError : public std::runtime_error {
 public:
  DomainError(Errc kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Errc kind() const { return kind_; }

 private:
  Errc kind_;
};

/// Thrown by parsers; carries the 1-based line/column of the offending token.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t col, const std::string& what)
      : std::runtime_error(what), line_(line), col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

}  // namespace ietflip
