#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mclt {

// Precondition violations: bad ranges, malformed ranks, invalid sequences.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration whose cardinality exceeds the configured cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::string required, std::int64_t cap)
      : std::runtime_error("enumeration of " + required +
                           " elements exceeds cap " + std::to_string(cap)),
        required_(std::move(required)),
        cap_(cap) {}

  const std::string& required() const { return required_; }
  std::int64_t cap() const { return cap_; }

 private:
  std::string required_;
  std::int64_t cap_;
};

// A moment of higher order than the sequence provides was requested.
class InsufficientMomentsError : public std::runtime_error {
 public:
  InsufficientMomentsError(int color, int required_order, int available_order)
      : std::runtime_error("color " + std::to_string(color) +
                           " requires moments up to order " +
                           std::to_string(required_order) + " but only " +
                           std::to_string(available_order) + " are available"),
        color_(color),
        required_order_(required_order),
        available_order_(available_order) {}

  int color() const { return color_; }
  int required_order() const { return required_order_; }
  int available_order() const { return available_order_; }

 private:
  int color_;
  int required_order_;
  int available_order_;
};

// Quadrature failed to reach the requested tolerance at the panel cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(double estimate, double error_bound)
      : std::runtime_error("quadrature did not converge: estimate " +
                           std::to_string(estimate) + ", error bound " +
                           std::to_string(error_bound)),
        estimate_(estimate),
        error_bound_(error_bound) {}

  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// Malformed moment file (schema or value errors).
class MomentFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mclt
