// errors.hpp - exception hierarchy shared by every module.
//
// All library failures derive from mualcq::Error so callers can catch one
// type; the CLI maps the concrete classes onto exit codes.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mualcq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed surface syntax. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A fixpoint binder whose variable does not occur positively in its body.
class WellFormednessError : public Error {
 public:
  using Error::Error;
};

/// A TBox side (or reasoning input) with free variables.
class ClosednessError : public Error {
 public:
  using Error::Error;
};

class UnsupportedRole : public Error {
 public:
  using Error::Error;
};

class InverseRoleUnsupported : public Error {
 public:
  using Error::Error;
};

class NotAFixpoint : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class NonMonotoneOperator : public Error {
 public:
  using Error::Error;
};

class DomainTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownIndividual : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NumberRestrictionPresent : public Error {
 public:
  using Error::Error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

/// Syntax or consistency problems in a model file.
class ModelFormatError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (witness re-validation, strategy
/// disagreement). Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mualcq
