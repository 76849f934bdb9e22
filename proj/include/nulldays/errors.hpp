#pragma once

#include <stdexcept>
#include <string>

namespace nulldays {

// Value outside the supported numeric range (years 1..9999, epoch days).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument outside the domain of a single formula term.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A (year, month, day) triple or date range that violates calendar rules.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nulldays
