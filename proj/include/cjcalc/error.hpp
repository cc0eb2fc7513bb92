#pragma once

#include <stdexcept>
#include <string>

namespace cjcalc {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad Cartan matrix, schema violation,
// rank mismatch, non-dominant argument where a dominant one is required.
class InputError : public Error {
 public:
  using Error::Error;
};

// A decomposition provider or Q-hat table lacks data for a needed weight.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the range of the machine integer type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Character long division has a nonzero remainder.
class DivisionError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed (e.g. a recursion that must descend did not).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace cjcalc
