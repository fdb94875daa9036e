#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

// A canonical-form value that was required to be a rational integer is not one.
struct NotAnInteger : std::runtime_error {
  explicit NotAnInteger(const std::string& what) : std::runtime_error(what) {}
};

// A coefficient recovered through the orthogonality relations failed the
// integrality certificate: the input values do not come from a ring element.
struct IntegralityViolation : std::runtime_error {
  explicit IntegralityViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// The requested space has no pre-quantization at this level.
struct NotPrequantizable : std::domain_error {
  explicit NotPrequantizable(const std::string& what)
      : std::domain_error(what) {}
};

// Two redundant computation routes disagreed. Always a bug.
struct ConsistencyError : std::logic_error {
  explicit ConsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace verlinde
