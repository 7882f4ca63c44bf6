#pragma once

#include <stdexcept>
#include <string>

namespace cliquedec {

// Raised when internal process state is inconsistent (e.g. removing an edge
// that is not present). Indicates a bug, not bad user input.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when a request is well-formed but refused as too expensive.
class InfeasibleRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cliquedec
