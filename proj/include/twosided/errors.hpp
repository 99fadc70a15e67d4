#pragma once

#include <stdexcept>
#include <string>

namespace twosided {

// Raised when parameters fall outside the regime an operation is defined for
// (out-of-range vertices, formula preconditions, malformed text input).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an exhaustive computation would exceed its configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twosided
