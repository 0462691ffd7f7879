// Temporary: tighter circulant checks.
#include <cstdio>
#include <cmath>
#include "fraclab/fbm.hpp"
using namespace fraclab;

int main() {
  int n = 5000;
  TimeGrid grid(1.0, n);
  FbmSampler c(Hurst(0.75), grid, FbmSampler::Method::Circulant);
  // increment variance at several lags vs |t-s|^{2H}
  for (int lag : {1, 10, 100, 1000}) {
    double sum2 = 0;
    long cnt = 0;
    for (int s = 0; s < 300; ++s) {
      auto p = c.sample(5000 + s);
      for (int i = lag; i < n; i += lag) {
        double d = p.values[i] - p.values[i - lag];
        sum2 += d * d;
        ++cnt;
      }
    }
    double var = sum2 / cnt;
    double expect = std::pow(lag * grid.dt(), 1.5);
    std::printf("lag %4d: var=%.6e expect=%.6e ratio=%.4f\n", lag, var, expect,
                var / expect);
  }
  // terminal variance with 4000 samples
  double m2 = 0;
  int M = 4000;
  for (int s = 0; s < M; ++s) {
    auto p = c.sample(90000 + s);
    m2 += p.values[n - 1] * p.values[n - 1];
  }
  std::printf("E[B(1)^2] = %.4f +- %.4f (expect 1)\n", m2 / M,
              std::sqrt(2.0 / M));
  return 0;
}
