#pragma once

#include <stdexcept>
#include <string>

namespace quadnet {

/// Malformed or out-of-contract input (bad text, rank-deficient net, ...).
class InvalidInput : public std::runtime_error {
public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace quadnet
