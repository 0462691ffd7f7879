#pragma once

#include <optional>

#include <Eigen/Core>

#include "fraclab/errors.hpp"

namespace fraclab {

/// Power-law generator rule c * k^e for eigenvalue / covariance sequences.
struct PowerLawRule {
  double coeff = 1.0;
  double exponent = 0.0;
  double operator()(int k) const { return coeff * std::pow(double(k), exponent); }
};

/// Spectral data of one noise component: operator eigenvalues gamma_k
/// (positive, non-decreasing) and covariance weights lambda_k (non-negative,
/// trace-class). When the sequences come from power-law rules the exponents
/// are kept for asymptotic (beyond-truncation) diagnostics:
/// lambda_k ~ c k^{-p}, gamma_k ~ c k^{q}.
struct SpectralBasis {
  int component = 1;  // 1 = velocity-like, 2 = temperature-like
  Eigen::VectorXd gamma;
  Eigen::VectorXd lambda;
  std::optional<PowerLawRule> gamma_rule;
  std::optional<PowerLawRule> lambda_rule;

  SpectralBasis() = default;
  SpectralBasis(int component, Eigen::VectorXd gamma_in,
                Eigen::VectorXd lambda_in);

  /// Basis from generator rules gamma_k = cg * k^q, lambda_k = cl * k^{-p}.
  static SpectralBasis power_law(int component, int size, double gamma_coeff,
                                 double q, double lambda_coeff, double p);

  Eigen::Index size() const { return gamma.size(); }
  double trace() const { return lambda.sum(); }

  /// Upper bound on the neglected trace sum_{k>N} lambda_k from the declared
  /// decay rule; empty when no rule was declared.
  std::optional<double> trace_tail_bound() const;
};

enum class Summability { kSummable, kNotSummable, kUnknown };

/// Regularity condition on the noise covariance against the operator:
/// sum_k lambda_k^{1/2} gamma_k^{5/2} must be finite for the
/// stochastic-convolution paths to live in H^3.
struct NoiseRegularity {
  double partial_sum = 0.0;     // over the truncation
  Summability verdict = Summability::kUnknown;  // p-series test on the rules
};

/// Evaluates the truncated sum and, when decay exponents are declared,
/// the p-series verdict: sum k^{-p/2 + 5q/2} converges iff -p/2 + 5q/2 < -1.
NoiseRegularity validate_noise_regularity(const SpectralBasis& basis);

}  // namespace fraclab
