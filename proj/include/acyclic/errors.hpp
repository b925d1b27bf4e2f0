#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acyclic {

/// An argument lies outside the operation's domain (bad vertex id, absent edge, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data is internally inconsistent: an improper coloring where a proper one
/// is required, a rotation that does not match the adjacency, and so on.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Face tracing produced an Euler characteristic other than 2 per component.
class NonPlanarEmbedding : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A JSON document does not match the expected schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a result that holds for every planar graph fails to hold, which
/// refutes the caller's planarity assertion.
class NotPlanarEvidence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigurationPresent : public std::runtime_error {
 public:
  ConfigurationPresent(int vertex, const std::string& what)
      : std::runtime_error(what), vertex_(vertex) {}

  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// A recoloring move would break properness or create a bichromatic cycle.
class MoveRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace acyclic
