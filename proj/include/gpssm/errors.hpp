#pragma once

#include <stdexcept>
#include <string>

namespace gpssm {

// Caller violated a precondition (bad dimensions, wrong kernel family,
// malformed input file). CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical procedure failed (factorization did not succeed, non-finite
// state during simulation). CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gpssm
