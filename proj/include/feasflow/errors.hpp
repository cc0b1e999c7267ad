#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "feasflow/types.hpp"

namespace feasflow {

// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The imports do not sum to zero; carries the nonzero residual sum.
class ImportImbalance : public Error {
 public:
  explicit ImportImbalance(Units residual);
  Units residual;
};

class NotStronglyConnected : public Error {
 public:
  NotStronglyConnected();
};

// An arc capacity is below what the requested solver needs.
class CapacityTooSmall : public Error {
 public:
  CapacityTooSmall(std::size_t arc, Units capacity, Units required);
  std::size_t arc;  // 0-based position in Network::arcs()
  Units capacity;
  Units required;
};

// A flow vector does not have one value per arc.
class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t flow_size, std::size_t arc_count);
};

// The cancellation pass met a vertex whose net demand had gone negative.
// On inputs meeting the solver preconditions this cannot happen; it signals
// a bug or a violated precondition and is never clamped away.
class NegativeDemandAtProcessing : public Error {
 public:
  NegativeDemandAtProcessing(Vertex vertex, Units demand);
  Vertex vertex;
  Units demand;
};

// Malformed text input. Line numbers are 1-based; 0 means the whole document.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& reason);
  std::size_t line;
};

// A value parsed fine but is out of range: vertex id outside 1..n, negative
// capacity, or a magnitude above 2^62.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Two import lines for the same vertex.
class DuplicateImport : public Error {
 public:
  DuplicateImport(std::size_t line, Vertex vertex);
  std::size_t line;
  Vertex vertex;
};

// Invalid generator parameters.
class SpecInvalid : public Error {
 public:
  using Error::Error;
};

// Solver, verifier and oracle did not agree. A test-failure signal.
class Disagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace feasflow
