#pragma once
#include <stdexcept>
#include <string>

namespace rlab {

// Configuration that cannot be honored: bad grid sizes, unresolvable
// witnesses, aliasing bilinear supports, malformed scenario input.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical hypothesis required by the requested analysis fails on the
// supplied data (sign conditions, separation from zero, support conditions).
struct hypothesis_error : std::runtime_error {
  explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical routine could not reach its accuracy target within its
// resource budget.  Never returned silently as a value.
struct accuracy_error : std::runtime_error {
  explicit accuracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the documented validity range of an operation.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rlab
