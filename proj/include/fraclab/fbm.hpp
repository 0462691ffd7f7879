#pragma once

#include <cstdint>
#include <memory>

#include <Eigen/Core>

#include "fraclab/errors.hpp"
#include "fraclab/time_grid.hpp"

namespace fraclab {

/// Hurst index of a fractional Brownian motion, in (0,1). Values above 1/2
/// give positively correlated increments; pathwise integration elsewhere in
/// the library additionally needs H > 1/2, which is enforced at configuration
/// level, not here.
struct Hurst {
  double value;
  explicit Hurst(double h) : value(h) {
    if (!(h > 0.0 && h < 1.0)) throw Error("Hurst index must lie in (0,1)");
  }
};

/// Covariance of fBm: R(s,t) = (|t|^{2H} + |s|^{2H} - |t-s|^{2H}) / 2.
double fbm_covariance(Hurst h, double s, double t);

/// One realization of fBm on a uniform grid, pinned to 0 at t = 0.
struct FbmPath {
  TimeGrid grid;
  double hurst = 0.5;
  std::uint64_t seed = 0;
  Eigen::VectorXd values;
};

/// Exact-in-law sampler of fBm paths on a fixed grid.
///
/// Small grids (n <= 4096 nodes) use a Cholesky factor of the full covariance
/// matrix; larger grids use circulant embedding of the increment covariance,
/// synthesized spectrally. Either way the finite-dimensional distributions
/// match fbm_covariance exactly, so the two backends agree in law and are
/// cross-checked against each other in the test suite.
///
/// The factorization is computed once in the constructor; sample() is const
/// and safe to call concurrently.
class FbmSampler {
 public:
  enum class Method { Auto, Cholesky, Circulant };

  FbmSampler(Hurst h, const TimeGrid& grid, Method method = Method::Auto);
  ~FbmSampler();
  FbmSampler(FbmSampler&&) noexcept;
  FbmSampler& operator=(FbmSampler&&) noexcept;

  FbmPath sample(std::uint64_t seed) const;

  Method method() const;
  const TimeGrid& grid() const;
  double hurst() const;

  /// Number of circulant eigenvalues clipped to zero (tiny negatives from
  /// rounding). Larger negatives throw CovarianceError instead of clipping,
  /// so a nonzero count here is surfaced, never silent.
  int clipped_eigenvalues() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience one-shot sampler (builds a factorization per call; use
/// FbmSampler directly for ensembles).
FbmPath sample_fbm(Hurst h, const TimeGrid& grid, std::uint64_t seed);

/// Smallest c >= 0 with |B(t_i)| <= t_i^2 + c at every node of this
/// realization, i.e. max_i (|B(t_i)| - t_i^2) clamped at zero.
double polynomial_envelope(const FbmPath& path);

}  // namespace fraclab
