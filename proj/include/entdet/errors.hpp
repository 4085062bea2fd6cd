#pragma once

#include <stdexcept>
#include <string>

namespace entdet {

/// Input failed a structural or physical validity check (shape, Hermiticity,
/// trace, positivity, file contents, parameter ranges).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Internally inconsistent floating-point intermediate (e.g. a moment
/// combination that is provably non-negative came out clearly negative).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entdet
