#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ugsolve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation was asked about an edge that is absent from a dense instance.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search (or a similar bounded procedure) would exceed its limit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A guarantee bound was evaluated outside the range where it is defined.
class OutOfRegime : public Error {
 public:
  using Error::Error;
};

/// A randomized construction did not validate within its retry budget.
class GenerationFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ugsolve
