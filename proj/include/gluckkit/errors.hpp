#pragma once

#include <stdexcept>
#include <string>

namespace gluckkit {

// Raised when an argument violates an operation's precondition. The message
// names the violated condition and is suitable as a one-line diagnostic.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Surgery coefficients must be positive integers; zero and negative
// coefficients are rejected with this type rather than mirrored.
class UnsupportedSurgeryError : public PreconditionError {
 public:
  explicit UnsupportedSurgeryError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace gluckkit
