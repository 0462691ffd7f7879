#include "fraclab/spectral_basis.hpp"

#include <cmath>

namespace fraclab {

SpectralBasis::SpectralBasis(int component_in, Eigen::VectorXd gamma_in,
                             Eigen::VectorXd lambda_in)
    : component(component_in),
      gamma(std::move(gamma_in)),
      lambda(std::move(lambda_in)) {
  if (gamma.size() != lambda.size() || gamma.size() == 0)
    throw Error("SpectralBasis: gamma and lambda must have equal nonzero size");
  if (component != 1 && component != 2)
    throw Error("SpectralBasis: component must be 1 or 2");
  for (Eigen::Index k = 0; k < gamma.size(); ++k) {
    if (!(gamma[k] > 0.0))
      throw Error("SpectralBasis: eigenvalues must be strictly positive");
    if (k > 0 && gamma[k] < gamma[k - 1])
      throw Error("SpectralBasis: eigenvalues must be non-decreasing");
    if (lambda[k] < 0.0)
      throw Error("SpectralBasis: covariance weights must be non-negative");
  }
}

SpectralBasis SpectralBasis::power_law(int component, int size,
                                       double gamma_coeff, double q,
                                       double lambda_coeff, double p) {
  PowerLawRule grule{gamma_coeff, q};
  PowerLawRule lrule{lambda_coeff, -p};
  Eigen::VectorXd g(size), l(size);
  for (int k = 1; k <= size; ++k) {
    g[k - 1] = grule(k);
    l[k - 1] = lrule(k);
  }
  SpectralBasis basis(component, std::move(g), std::move(l));
  basis.gamma_rule = grule;
  basis.lambda_rule = lrule;
  return basis;
}

std::optional<double> SpectralBasis::trace_tail_bound() const {
  if (!lambda_rule) return std::nullopt;
  const double p = -lambda_rule->exponent;
  if (p <= 1.0) return std::nullopt;  // not even trace-class beyond N
  const double n = double(size());
  // sum_{k>N} c k^{-p} <= c * N^{1-p} / (p-1)
  return lambda_rule->coeff * std::pow(n, 1.0 - p) / (p - 1.0);
}

NoiseRegularity validate_noise_regularity(const SpectralBasis& basis) {
  NoiseRegularity out;
  for (Eigen::Index k = 0; k < basis.size(); ++k)
    out.partial_sum +=
        std::sqrt(basis.lambda[k]) * std::pow(basis.gamma[k], 2.5);
  if (basis.gamma_rule && basis.lambda_rule) {
    const double p = -basis.lambda_rule->exponent;
    const double q = basis.gamma_rule->exponent;
    out.verdict = (-p / 2.0 + 2.5 * q < -1.0) ? Summability::kSummable
                                              : Summability::kNotSummable;
  }
  return out;
}

}  // namespace fraclab
