#pragma once

#include <stdexcept>
#include <string>

namespace picard {

/// Raised when a computation exceeds its configured step or size cap.
/// Distinct from mathematical failure: the caller may retry with a larger
/// cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace picard
