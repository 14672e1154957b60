#pragma once

#include <stdexcept>
#include <string>

namespace twoterm {

// Base class for every failure the library reports. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input: unknown ids, loops, bad terminals.
class GraphError : public Error {
 public:
  using Error::Error;
};

// A precondition on a numeric/algebraic argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iterative procedure ran out of budget before meeting its target.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Unreadable files and malformed serialized input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace twoterm
