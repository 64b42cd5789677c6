#pragma once

#include <stdexcept>
#include <string>

namespace fourpi {

// Base class for all errors raised by the library. Every error carries a
// human-readable message suitable for a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (non-positive energy, non-positive potential magnitude, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The diffraction geometry is impossible: g1 >= 2 k0.
class GeometryError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A local wavenumber vanishes exactly (E equals the potential step).
class ThresholdError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A spin channel is closed (E <= magnetic energy) where propagation is
// required.
class ChannelClosedError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numerical procedure failed to reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fourpi
