#pragma once

#include <stdexcept>
#include <string>

namespace qcarnot {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation
// (non-positive temperature, degenerate Hamiltonian, singular reference state, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A density matrix whose Bloch vector lies outside the unit ball.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Step doubling did not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Two independent routes to the same quantity disagree beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcarnot
