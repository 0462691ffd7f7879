#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fraclab {

/// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A covariance factorization broke down. `pivot` is the index of the
/// offending Cholesky pivot (or circulant eigenvalue) and `value` its value.
class CovarianceError : public Error {
 public:
  CovarianceError(const std::string& what, long pivot, double value)
      : Error(what), pivot(pivot), value(value) {}
  long pivot;
  double value;
};

/// Fixed-point iteration failed to contract. Carries the successive-difference
/// ratio history so the caller can see how the iteration behaved.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::vector<double> ratios)
      : Error(what), ratio_history(std::move(ratios)) {}
  std::vector<double> ratio_history;
};

/// Trajectory escaped the admissible ball. Carries the partial energy trace
/// up to the blow-up step.
class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, std::vector<double> trace, double time)
      : Error(what), partial_trace(std::move(trace)), blowup_time(time) {}
  std::vector<double> partial_trace;
  double blowup_time;
};

}  // namespace fraclab
