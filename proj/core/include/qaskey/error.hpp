#pragma once

#include <stdexcept>
#include <string>

namespace qaskey {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (|q| >= 1, wrong
/// arity, violated convergence constraint, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A factor that must be nonzero vanished. `index` identifies where the pole
/// was hit (a product index, a lattice point, ...) when that is meaningful.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, long index = 0) : Error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// A series that is divergent for the given inputs.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure (quadrature, summation) failed to meet its gate.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qaskey
