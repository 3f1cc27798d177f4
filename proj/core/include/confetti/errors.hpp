#pragma once

#include <stdexcept>
#include <string>

namespace confetti {

// Error taxonomy maps onto the CLI exit codes: ConfigError and plain Error
// exit with 2, InvariantError (a bug signal, e.g. a monotone coupling
// violation) exits with 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user input: bad parameters, infeasible grids, malformed files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A colour query hit a point no leaf covers; deepen first.
class UncoveredError : public Error {
 public:
  using Error::Error;
};

// Iterative deepening gave up after the configured number of doublings.
class DeepeningError : public Error {
 public:
  using Error::Error;
};

// A hard internal invariant failed (monotone coupling, pixel duality, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace confetti
