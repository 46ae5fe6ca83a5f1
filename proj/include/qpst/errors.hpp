#pragma once

#include <stdexcept>
#include <string>

namespace qpst {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad input: dimension mismatches, invalid sizes, even p-factors, ...
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// A numerical routine could not produce a trustworthy answer.
class NumericalError : public Error {
public:
  using Error::Error;
};

// A body eigenvalue spacing is zero, so the Q-factor is undefined.
class DegenerateSpectrum : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// Mirror parity of an eigenvector cannot be read off its end components.
class ParityUndetermined : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// Throws InvalidArgument unless p is a positive odd integer.
inline void require_odd_p(int p) {
  if (p < 1 || p % 2 == 0) {
    throw InvalidArgument("p-factor must be a positive odd integer, got " + std::to_string(p));
  }
}

}  // namespace qpst
