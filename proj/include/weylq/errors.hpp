#pragma once

#include <stdexcept>
#include <string>

namespace weylq {

// Bad input: inadmissible rank, unknown root, malformed interval, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A formula was requested outside the range where it is asserted
// (facet-removal thresholds, incompatible subsets for deformation formulas).
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An enumeration or subset guard was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verification sample disagreed with a reconstructed quasi-polynomial, or an
// internal identity (fiber divisibility, monicity) failed.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weylq
