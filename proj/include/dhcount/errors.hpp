#pragma once

#include <stdexcept>
#include <string>

namespace dhcount {

// Malformed or out-of-range input (bad prime, bad exponent vector, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An engine was asked to run outside the hypotheses of its formula
// (p = 2 for the p-adic engines, lambda = 0 for the Dwork engines, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numeric result could not be certified: complex value too far from an
// integer, or p-adic precision too low to reconstruct an integer.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dhcount
