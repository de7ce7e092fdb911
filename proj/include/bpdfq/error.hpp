#pragma once

#include <stdexcept>
#include <string>

namespace bpdfq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two quadratic-field values from different parameter sets were combined.
class ParameterSetError : public Error {
 public:
  using Error::Error;
};

class DivisionError : public Error {
 public:
  using Error::Error;
};

// ab = 0 or ab + 4 = 0: the characteristic polynomial has a repeated or zero root.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A closed form that must be rational left a nonzero sqrt(D) component.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

// A series that must be a power series kept a negative-exponent term.
class FormulaTranscriptionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bpdfq
