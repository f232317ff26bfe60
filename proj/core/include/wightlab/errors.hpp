// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace wightlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or inconsistent configuration.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Problem size exceeds a documented cap.
class SizeLimitError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the domain of the operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Lattice or array shapes do not match.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Evaluation requested exactly on a singular set.
class SingularPointError : public Error {
  public:
    using Error::Error;
};

/// A documented precondition was violated.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Supplied majorant is not positive definite.
class InvalidMajorant : public Error {
  public:
    using Error::Error;
};

/// Gram matrix is not hermitian to the guard tolerance.
class HermiticityViolation : public Error {
  public:
    HermiticityViolation(const std::string& what, double asymmetry)
        : Error(what), asymmetry_(asymmetry) {}
    double asymmetry() const noexcept { return asymmetry_; }

  private:
    double asymmetry_;
};

/// Numerical procedure did not reach its tolerance; carries the residual.
class ToleranceFailure : public Error {
  public:
    ToleranceFailure(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

}  // namespace wightlab
