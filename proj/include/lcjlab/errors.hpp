#pragma once

#include <stdexcept>
#include <string>

namespace lcj {

// Exit codes used by the CLI. Library code throws; the CLI maps to these.
enum class ExitCode : int {
  ok = 0,
  validation_failure = 2,
  cap_exceeded = 3,
  property_failure = 4,
};

// Structurally invalid input: non-metric matrices, unbalanced measures,
// incompatible candidate families, malformed files.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A request exceeds a configured size cap (exact-mode atom count,
// generator point limits, enumeration bit budgets).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A computed quantity violates an invariant it was required to satisfy
// (duality gap, martingale identity, separation of blocks).
class PropertyError : public std::runtime_error {
 public:
  explicit PropertyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lcj
