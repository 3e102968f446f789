#pragma once

#include <stdexcept>
#include <string>

namespace nltrace {

/// Base class for every error raised by the library. The CLI maps all of
/// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch or a matrix that is not Hermitian when it must be.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Two evaluation routes that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

/// The weight lacks a property (concavity, continuity) the operation needs.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Malformed or incomplete input data (JSON, missing measure entries).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace nltrace
