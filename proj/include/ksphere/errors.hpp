#pragma once

#include <stdexcept>
#include <string>

namespace ksphere {

// Base of every error the library raises. The CLI maps the concrete type to
// an exit code, so new error kinds should derive from one of the leaves below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix sizes that do not fit the operation (mismatch, odd size for ♯, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain (even k, negative d, off-sphere point).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Configured limits exceeded (k above the cap).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Integer overflow inside exact arithmetic. Never silently wrapped.
class OverflowError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

// A documented precondition of an operation does not hold for the input
// (non-unitary input, |S| not divisible by 4, row not satisfied, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Spectral gap closed while integrating a projection-valued invariant.
class GapError : public ContractError {
 public:
  using ContractError::ContractError;
};

// Malformed JSON or schema violation in an input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ksphere
