#pragma once

#include <stdexcept>
#include <string>

namespace mockq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the function (e.g. theta at x = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A denominator or theta factor vanishes within the pole guard.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An adaptive sum, product or quadrature did not converge within its cap.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A numeric value was requested for a series that only exists formally.
class DivergentSeriesError : public Error {
 public:
  using Error::Error;
};

/// Exponent differences put a denominator parameter on q^{-N}.
class ResonanceError : public Error {
 public:
  using Error::Error;
};

class UnknownCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace mockq
