#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pknets {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input: unknown names, elements from different
/// groups, functors over different shapes, out-of-range indices.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An algebraic axiom failed while building a validated structure.
/// `witness()` names the offending cell, triple or morphism.
class StructureError : public Error {
 public:
  StructureError(const std::string& what, std::string witness)
      : Error(what + ": " + witness), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A groupoid operation that needs a single connected component got more.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured bounds.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// No transformation relates two consecutive chords of a progression.
class AnalysisError : public Error {
 public:
  using Error::Error;
};

struct Limits {
  std::size_t max_group_order = 10'000;
  std::uint64_t max_search_nodes = 50'000'000;
};

/// Outcome of an exhaustive check. `witness` is empty when `ok`.
struct CheckResult {
  bool ok = true;
  std::string witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }

  explicit operator bool() const noexcept { return ok; }
};

}  // namespace pknets
