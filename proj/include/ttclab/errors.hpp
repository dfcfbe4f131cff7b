#pragma once

#include <stdexcept>
#include <string>

namespace ttclab {

// Malformed input: bad labels, wrong sizes, broken permutations.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Input outside the domain an operation is defined on, e.g. a non-CL order
// passed to ATTC or an instance that does not match a pinned rule.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Exhaustive enumeration requested beyond the configured cap.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace ttclab
