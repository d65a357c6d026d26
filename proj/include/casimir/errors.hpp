#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the domain of a formula (non-positive length, overdamped material, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Polarizability evaluated exactly on its pole (ε = −2).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Adding or comparing quantities of different energy dimension.
class DimensionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Invalid or incomplete configuration (missing density, grid too coarse, ...).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown catalog entry.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Tabulated data queried outside its sampled range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Quadrature gave up before reaching the requested tolerance. Carries the
/// best estimate so callers can decide whether it is usable anyway.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

/// β → 0 extrapolation did not settle (residuals growing).
class ExtrapolationError : public std::runtime_error {
 public:
  ExtrapolationError(const std::string& what, double last_value, double residual)
      : std::runtime_error(what), last_value_(last_value), residual_(residual) {}

  double last_value() const noexcept { return last_value_; }
  double residual() const noexcept { return residual_; }

 private:
  double last_value_;
  double residual_;
};

}  // namespace casimir
