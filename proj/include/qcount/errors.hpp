#pragma once

#include <stdexcept>
#include <string>

namespace qcount {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in incompatible spaces (total dimensions differ, bad register
// index, mismatched factor lists).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (omega out of
// range, k in {0, N} where a rotation angle is undefined, odd-order graph...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A value failed an eager invariant check (non-unit norm, non-unitary matrix,
// improper coloring).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcount
