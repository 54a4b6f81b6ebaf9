#ifndef ZETALAB_ERRORS_HPP
#define ZETALAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetalab {

class LabError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a pole (Gamma at a nonpositive integer, zeta at 1).
class PoleError : public LabError {
 public:
  using LabError::LabError;
};

/// Argument outside the region an operation is defined or validated on.
class DomainError : public LabError {
 public:
  using LabError::LabError;
};

/// Request outside the domain where the stated accuracy has been validated.
class PrecisionError : public LabError {
 public:
  using LabError::LabError;
};

/// A numerical procedure failed to reach its error target within budget.
class ConvergenceError : public LabError {
 public:
  ConvergenceError(const std::string& what, int index, double log10_tolerance)
      : LabError(what), index_(index), log10_tolerance_(log10_tolerance) {}

  /// Offending index m (or -1 when not applicable).
  int index() const { return index_; }
  double log10_tolerance() const { return log10_tolerance_; }

 private:
  int index_;
  double log10_tolerance_;
};

class RootFindingError : public LabError {
 public:
  using LabError::LabError;
};

/// Q_m(1-s) != (-1)^m Q_m(s); indicates a construction bug.
class FunctionalEquationViolation : public LabError {
 public:
  using LabError::LabError;
};

class ConfigError : public LabError {
 public:
  using LabError::LabError;
};

}  // namespace zetalab

#endif  // ZETALAB_ERRORS_HPP
