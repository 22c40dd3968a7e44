#pragma once

#include <stdexcept>
#include <string>

namespace twistnorm {

/// Malformed or inconsistent user input (bad table, unknown label, invalid map).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A request that exceeds one of the enumeration bounds of the library.
class CapabilityError : public std::length_error {
 public:
  explicit CapabilityError(const std::string& what) : std::length_error(what) {}
};

/// An operation was called with arguments that violate its precondition
/// (for example an involution spec that was never validated).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twistnorm
