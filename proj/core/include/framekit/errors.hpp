#pragma once

#include <stdexcept>
#include <string>

namespace framekit {

/// Malformed or out-of-domain input: bad dimensions, non-finite values,
/// violated preconditions. The message names the offending piece.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested construction does not fit in the given index set
/// (effective dimension too small for the number of components asked for).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A randomized construction exhausted its redraw budget.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace framekit
