#pragma once

#include <stdexcept>
#include <string>

namespace prhr {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (non-numeric cell, missing value, bad header).
// Messages carry the file line and column name of the offending cell.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input that does not match the requested column
// layout (unknown column, unknown group label, wrong group count).
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A sample is too small for the requested operation.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// A parameter is outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A plug-in estimate is degenerate (tau in {0,1}) and the dependent
// statistic is undefined for this sample.
class DegenerateEstimateError : public Error {
 public:
  using Error::Error;
};

// Centered pseudo-values are all of one sign, so the constrained
// likelihood maximization has no solution.
class HullViolationError : public Error {
 public:
  using Error::Error;
};

// An iterative solver failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace prhr
