#pragma once

#include <stdexcept>
#include <string>

namespace spinpair {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong dimensions, bad indices, empty ranges.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A matrix that should be Hermitian is not, beyond tolerance.
class NotHermitian : public Error {
 public:
  NotHermitian(const std::string& what, double asymmetry)
      : Error(what), asymmetry_(asymmetry) {}
  [[nodiscard]] double asymmetry() const noexcept { return asymmetry_; }

 private:
  double asymmetry_;
};

/// A matrix that should be positive semidefinite has a negative eigenvalue
/// below the clamping tolerance.
class NotPositive : public Error {
 public:
  NotPositive(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  [[nodiscard]] double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// A state or operator does not commute with the required P operator.
class SymmetryViolation : public Error {
 public:
  SymmetryViolation(const std::string& what, double commutator_norm)
      : Error(what), commutator_norm_(commutator_norm) {}
  [[nodiscard]] double commutator_norm() const noexcept { return commutator_norm_; }

 private:
  double commutator_norm_;
};

/// Bloch parameters outside the physical domain (the state is not PSD).
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// A computation whose every candidate point was rejected (e.g. a scan slice
/// that misses the physical domain entirely).
class EmptyResult : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed to converge or a numerical guard tripped.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace spinpair
