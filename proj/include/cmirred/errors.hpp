#pragma once

#include <stdexcept>
#include <string>

namespace cmirred {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live over different coefficient fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Polynomials from different rings (field or variable list differ).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A proven identity failed to hold; always an implementation bug.
class InternalAssertion : public Error {
 public:
  using Error::Error;
};

}  // namespace cmirred
