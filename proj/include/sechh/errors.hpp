#pragma once

#include <stdexcept>
#include <string>

namespace sechh {

/// Two objects that must live in the same ambient space do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that needs a commutative triple was handed a non-commutative one.
class NonCommutativeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested degree or chain-space size exceeds the configured cap.
class ResourceCapError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A structural fact that must hold for any valid input failed; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sechh
