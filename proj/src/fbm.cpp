#include "fraclab/fbm.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Cholesky>
#include <unsupported/Eigen/FFT>

namespace fraclab {

namespace {

constexpr Eigen::Index kCholeskyMaxNodes = 4096;

double pow_abs(double x, double e) { return std::pow(std::abs(x), e); }

/// Autocovariance of unit-lag fBm increments at lag k, scaled by dt^{2H}:
/// gamma(k) = dt^{2H} * (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}) / 2.
double increment_autocov(double two_h, double dt, Eigen::Index k) {
  const double kk = double(k);
  const double g = 0.5 * (pow_abs(kk + 1.0, two_h) - 2.0 * pow_abs(kk, two_h) +
                          pow_abs(kk - 1.0, two_h));
  return std::pow(dt, two_h) * g;
}

}  // namespace

double fbm_covariance(Hurst h, double s, double t) {
  const double two_h = 2.0 * h.value;
  return 0.5 * (pow_abs(t, two_h) + pow_abs(s, two_h) - pow_abs(t - s, two_h));
}

struct FbmSampler::Impl {
  Hurst hurst;
  TimeGrid grid;
  Method method = Method::Cholesky;
  int clipped = 0;

  // Cholesky backend: lower factor of the covariance of (B(t_1)..B(t_{n-1})).
  Eigen::MatrixXd chol;

  // Circulant backend: sqrt(eig/M) scaling per frequency.
  Eigen::VectorXd spectral_scale;
  Eigen::Index fft_size = 0;

  explicit Impl(Hurst h) : hurst(h) {}

  void build_cholesky() {
    const Eigen::Index m = grid.count - 1;
    Eigen::MatrixXd cov(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j <= i; ++j) {
        cov(i, j) = fbm_covariance(hurst, grid.node(i + 1), grid.node(j + 1));
        cov(j, i) = cov(i, j);
      }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
      // Locate the pivot that broke down for the error report.
      Eigen::MatrixXd a = cov;
      for (Eigen::Index j = 0; j < m; ++j) {
        double d = a(j, j);
        for (Eigen::Index k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
        if (!(d > 0.0))
          throw CovarianceError(
              "fBm covariance matrix is numerically non-positive-definite "
              "(Cholesky pivot " +
                  std::to_string(j) + " = " + std::to_string(d) + ")",
              long(j), d);
        a(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < m; ++i) {
          double s = a(i, j);
          for (Eigen::Index k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
          a(i, j) = s / a(j, j);
        }
      }
      throw CovarianceError("fBm covariance factorization failed", -1, 0.0);
    }
    chol = llt.matrixL();
  }

  void build_circulant() {
    const Eigen::Index m = grid.count - 1;  // increments
    Eigen::Index M = 1;
    while (M < 2 * m) M <<= 1;
    fft_size = M;

    const double two_h = 2.0 * hurst.value;
    const double dt = grid.dt();
    std::vector<std::complex<double>> row(M);
    for (Eigen::Index k = 0; k <= M / 2; ++k)
      row[k] = increment_autocov(two_h, dt, k);
    for (Eigen::Index k = 1; k < M / 2; ++k) row[M - k] = row[k];

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> eig(M);
    fft.fwd(eig, row);

    double max_eig = 0.0;
    for (const auto& e : eig) max_eig = std::max(max_eig, e.real());
    const double tol = -1e-10 * max_eig;

    spectral_scale.resize(M);
    clipped = 0;
    for (Eigen::Index k = 0; k < M; ++k) {
      double e = eig[k].real();
      if (e < 0.0) {
        if (e < tol)
          throw CovarianceError(
              "circulant embedding of the fBm increment covariance has a "
              "negative eigenvalue (index " +
                  std::to_string(k) + " = " + std::to_string(e) + ")",
              long(k), e);
        e = 0.0;
        ++clipped;
      }
      spectral_scale[k] = std::sqrt(e / double(M));
    }
  }

  FbmPath sample_cholesky(std::uint64_t seed) const {
    const Eigen::Index m = grid.count - 1;
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd z(m);
    for (Eigen::Index i = 0; i < m; ++i) z[i] = normal(gen);

    FbmPath path{grid, hurst.value, seed, Eigen::VectorXd::Zero(grid.count)};
    path.values.tail(m) = chol.triangularView<Eigen::Lower>() * z;
    return path;
  }

  FbmPath sample_circulant(std::uint64_t seed) const {
    const Eigen::Index m = grid.count - 1;
    const Eigen::Index M = fft_size;
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::vector<std::complex<double>> w(M);
    w[0] = spectral_scale[0] * normal(gen);
    w[M / 2] = spectral_scale[M / 2] * normal(gen);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Eigen::Index k = 1; k < M / 2; ++k) {
      const double a = normal(gen);
      const double b = normal(gen);
      const std::complex<double> v(a * inv_sqrt2, b * inv_sqrt2);
      w[k] = spectral_scale[k] * v;
      w[M - k] = spectral_scale[k] * std::conj(v);
    }

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> out(M);
    fft.fwd(out, w);

    FbmPath path{grid, hurst.value, seed, Eigen::VectorXd(grid.count)};
    path.values[0] = 0.0;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      acc += out[i].real();
      path.values[i + 1] = acc;
    }
    return path;
  }
};

FbmSampler::FbmSampler(Hurst h, const TimeGrid& grid, Method method)
    : impl_(std::make_unique<Impl>(h)) {
  impl_->grid = grid;
  if (method == Method::Auto)
    method = grid.count <= kCholeskyMaxNodes ? Method::Cholesky
                                             : Method::Circulant;
  impl_->method = method;
  if (method == Method::Cholesky)
    impl_->build_cholesky();
  else
    impl_->build_circulant();
}

FbmSampler::~FbmSampler() = default;
FbmSampler::FbmSampler(FbmSampler&&) noexcept = default;
FbmSampler& FbmSampler::operator=(FbmSampler&&) noexcept = default;

FbmPath FbmSampler::sample(std::uint64_t seed) const {
  return impl_->method == Method::Cholesky ? impl_->sample_cholesky(seed)
                                           : impl_->sample_circulant(seed);
}

FbmSampler::Method FbmSampler::method() const { return impl_->method; }
const TimeGrid& FbmSampler::grid() const { return impl_->grid; }
double FbmSampler::hurst() const { return impl_->hurst.value; }
int FbmSampler::clipped_eigenvalues() const { return impl_->clipped; }

FbmPath sample_fbm(Hurst h, const TimeGrid& grid, std::uint64_t seed) {
  return FbmSampler(h, grid).sample(seed);
}

double polynomial_envelope(const FbmPath& path) {
  double c = 0.0;
  for (Eigen::Index i = 0; i < path.grid.count; ++i) {
    const double t = path.grid.node(i);
    c = std::max(c, std::abs(path.values[i]) - t * t);
  }
  return c;
}

}  // namespace fraclab
