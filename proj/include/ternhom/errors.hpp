#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ternhom {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that does not describe a valid object (bad index, wrong table size).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// Syntax error in one of the text mini-languages. `column` is 1-based.
class ParseError : public MalformedInput {
 public:
  ParseError(const std::string& what, std::size_t column)
      : MalformedInput(what + " at column " + std::to_string(column)),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// A cube that fails the ternary group axioms where a group is required.
class NotAGroup : public Error {
 public:
  using Error::Error;
};

// Input is well formed but lacks structure an operation needs
// (e.g. no parity map, so no odd elements).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A configured bound (cosets, basis size, entry size, time) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// An internal mathematical postcondition failed, or a caller passed
// something that violates a documented precondition (e.g. a non-cycle).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ternhom
