#pragma once

#include <stdexcept>
#include <string>

namespace freecoset {

// Input violates an algebraic precondition (bad automorphism, support
// violation, non-group table, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class SyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force enumeration would exceed the configured point budget.
class SizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace freecoset
