#pragma once

#include <stdexcept>
#include <string>

namespace machin {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller broke a documented precondition (e.g. stepping a finished remainder).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Non-partial generation produced a denominator longer than the digit limit.
class CutoffReached : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partial formula is too short to bound its tail at the requested precision.
class PrecisionUnachievable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The tangent-addition fold left the open interval (-pi/2, pi/2).
class FoldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace machin
