#pragma once

#include <stdexcept>
#include <string>

namespace eigmult {

// Malformed user input: bad JSON, wrong shapes, mixed scalar kinds.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shape or dimension mismatch between operands.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

// Failure of a computational engine (root finder, resultant ratio, ...).
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Macaulay's det(M)/det(M') ratio stayed 0/0 after every fallback.
class IndeterminateRatio : public EngineError {
 public:
  using EngineError::EngineError;
};

class ConvergenceError : public EngineError {
 public:
  using EngineError::EngineError;
};

// A structural invariant that must always hold was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eigmult
