#pragma once

#include <stdexcept>
#include <string>

namespace primepark {

enum class GraphErrorKind {
  TooFewVertices,
  DuplicateVertex,
  UnknownVertex,
  LoopEdge,
  InvalidMultiplicity,
  Disconnected,
  SinkDeletion,
};

const char* to_string(GraphErrorKind kind);

/// Raised when a rooted multigraph cannot be formed.
class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Input lies outside the domain of an operation (stable vertex toppled,
/// non-parking input to a primeness test, malformed vector, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed its configured size cap.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Stabilisation exceeded its toppling budget.
class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON/CSV/command-line input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace primepark
