#pragma once

#include <stdexcept>
#include <string>

namespace treecount {

/// Malformed textual input (graph6, edge lists, phi specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size or time guard refused the job.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Signals a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace treecount
