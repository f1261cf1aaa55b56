#pragma once

#include <stdexcept>
#include <string>

namespace galois {

/// Thrown when a computation would exceed a configured size bound
/// (root-of-unity modulus growth, group closure, subgroup enumeration).
/// Signals "parameters too large", not a logic error.
struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace galois
