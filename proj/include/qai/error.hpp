#pragma once

#include <stdexcept>
#include <string>

namespace qai {

// Root of every error thrown by the library. The CLI maps subclasses onto
// exit codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Qubit count outside [1, StateVector::kMaxQubits].
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Register or control qubits that do not fit the state or overlap.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// Basis index outside [0, 2^q).
class IndexError : public Error {
 public:
  using Error::Error;
};

// A real input outside its admissible domain (t outside V_M, t outside [0, T)).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A function value that would alias across the value register boundary.
class RangeError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class UndersampledError : public Error {
 public:
  using Error::Error;
};

// Malformed text input: polynomial files, configs, tables, state dumps.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qai
