#pragma once

#include <stdexcept>
#include <string>

namespace su2free {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic preconditions (division by zero, inversion of zero, norm != 1).
struct DomainError : Error {
  using Error::Error;
};

// Mixing angle-form and surd-form operands.
struct RepresentationError : Error {
  using Error::Error;
};

// Structural preconditions: non-normal subgroups, maps that fail to be
// homomorphisms, malformed quintuples.
struct ValidationError : Error {
  using Error::Error;
};

// Enumeration larger than the configured element budget.
struct BudgetError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace su2free
