#pragma once

#include <stdexcept>
#include <string>

namespace kdvlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A solution spec is internally inconsistent (e.g. beta given to a
/// family without a Galilean offset) or two specs cannot be combined.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of a singular family.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Iterative kernels that fail to converge, blow-up during integration.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace kdvlab
