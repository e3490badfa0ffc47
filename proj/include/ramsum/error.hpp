#pragma once

#include <stdexcept>
#include <string>

namespace ramsum {

// Base of every error thrown by the library. The CLI maps all of these
// to exit code 1 (compute error); argument validation is its own concern.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A requested size exceeds a documented cap (sieve limit, block size, q).
class CapacityError : public Error {
public:
  using Error::Error;
};

// An argument lies outside the precomputed tables.
class RangeError : public Error {
public:
  using Error::Error;
};

// An argument lies outside the envelope where the numerics are validated.
class DomainError : public Error {
public:
  using Error::Error;
};

class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

// Checked 128-bit accumulation would wrap.
class OverflowError : public Error {
public:
  using Error::Error;
};

// A quadrature cannot reach its accuracy target with the given settings.
class AccuracyError : public Error {
public:
  using Error::Error;
};

}  // namespace ramsum
