#pragma once

#include <stdexcept>
#include <string>

namespace treeharm {

// Violation of a documented precondition or a value outside the domain an
// operation is defined on. The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration would exceed a configured cap. Carries the predicted size so
// callers can report it without redoing the count.
class CapExceeded : public DomainError {
 public:
  CapExceeded(const std::string& what, unsigned long long predicted)
      : DomainError(what), predicted_size(predicted) {}
  unsigned long long predicted_size;
};

}  // namespace treeharm
