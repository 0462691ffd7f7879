// Temporary numerical validation harness (deleted before delivery).
#include <cstdio>
#include <cmath>
#include "fraclab/fbm.hpp"
#include "fraclab/frac_calc.hpp"

using namespace fraclab;

int main() {
  // --- Weyl D(I(phi)) recovery for phi in {1, t, sin t} ---
  for (const char* name : {"one", "t", "sin"}) {
    std::printf("D(I(phi)) recovery, phi = %s\n", name);
    for (int n : {256, 512, 1024, 2048}) {
      TimeGrid grid(1.0, n);
      auto phi = GridFunction::sample(grid, [&](double t) {
        if (name[0] == 'o') return 1.0;
        if (name[0] == 't') return t;
        return std::sin(t);
      });
      FracOrder a(0.3);
      auto f = rl_integral_left(phi, a);
      auto rec = weyl_left(f, a);
      double err = 0;
      for (int i = 1; i < n; ++i)
        err = std::max(err, std::abs(rec.values[i] - phi.values[i]));
      std::printf("  n=%5d  max_err(i>=1) = %.3e\n", n, err);
    }
  }

  // --- weyl_left(t) at t=1, alpha=0.3: expect 1/Gamma(1.7) ---
  {
    TimeGrid grid(1.0, 1024);
    auto f = GridFunction::sample(grid, [](double t) { return t; });
    auto d = weyl_left(f, FracOrder(0.3));
    std::printf("weyl_left(t)(1) = %.12f expect %.12f\n",
                d.values[1023], 1.0 / std::tgamma(1.7));
  }

  // --- weyl_left(const) ---
  {
    TimeGrid grid(1.0, 512);
    auto f = GridFunction::sample(grid, [](double) { return 3.0; });
    auto d = weyl_left(f, FracOrder(0.3));
    double t = grid.node(200);
    std::printf("weyl_left(3)(t=%.3f) = %.15e expect %.15e\n", t,
                d.values[200], 3.0 * std::pow(t, -0.3) / std::tgamma(0.7));
  }

  // --- RL semigroup: I^{0.2} I^{0.3} t^2 vs I^{0.5} t^2, n=2048 ---
  {
    TimeGrid grid(1.0, 2048);
    auto phi = GridFunction::sample(grid, [](double t) { return t * t; });
    auto lhs = rl_integral_left(rl_integral_left(phi, FracOrder(0.3)),
                                FracOrder(0.2));
    auto rhs = rl_integral_left(phi, FracOrder(0.5));
    double err = (lhs.values - rhs.values).cwiseAbs().maxCoeff();
    std::printf("semigroup max err = %.3e (target < 1e-5)\n", err);
  }

  // --- alpha -> 1 sanity ---
  {
    TimeGrid grid(1.0, 2048);
    auto phi = GridFunction::sample(grid, [](double) { return 1.0; });
    auto v = rl_integral_left(phi, FracOrder(0.999));
    std::printf("I^0.999[1](1) = %.6f (expect ~1 within 1e-2)\n",
                v.values[2047]);
  }

  // --- Stieltjes: f=t, g=t^2 -> 2/3 ---
  for (int n : {512, 1024, 2048, 4096}) {
    TimeGrid grid(1.0, n);
    auto f = GridFunction::sample(grid, [](double t) { return t; });
    auto g = GridFunction::sample(grid, [](double t) { return t * t; });
    double v = stieltjes_integral(f, g, FracOrder(0.3));
    std::printf("stieltjes(t, t^2) n=%5d: %.10f err=%.3e\n", n, v,
                std::abs(v - 2.0 / 3.0));
  }

  // --- Stieltjes: f == 1 -> g(T) - g(0) exactly ---
  {
    TimeGrid grid(1.0, 512);
    auto f = GridFunction::sample(grid, [](double) { return 1.0; });
    auto g = GridFunction::sample(grid, [](double t) { return std::cos(3 * t); });
    double v = stieltjes_integral(f, g, FracOrder(0.3));
    std::printf("stieltjes(1, cos3t) err=%.3e\n",
                std::abs(v - (std::cos(3.0) - 1.0)));
  }

  // --- Stieltjes vs smooth oracle: f=sin, g=exp, int f g' ---
  for (int n : {1024, 2048, 4096}) {
    TimeGrid grid(1.0, n);
    auto f = GridFunction::sample(grid, [](double t) { return std::sin(t); });
    auto g = GridFunction::sample(grid, [](double t) { return std::exp(t); });
    double v = stieltjes_integral(f, g, FracOrder(0.35));
    // oracle: int_0^1 sin t e^t dt = (e (sin1 - cos1) + 1)/2
    double oracle = 0.5 * (std::exp(1.0) * (std::sin(1.0) - std::cos(1.0)) + 1.0);
    std::printf("stieltjes(sin, exp) n=%5d err=%.3e\n", n, std::abs(v - oracle));
  }

  // --- restriction consistency ---
  {
    int n = 2049;
    TimeGrid grid(1.0, n);
    auto f = GridFunction::sample(grid, [](double t) { return std::cos(2 * t); });
    auto g = GridFunction::sample(grid, [](double t) { return std::sin(3 * t); });
    FracOrder a(0.3);
    int cut = 1536;  // t = 0.75
    double direct = stieltjes_integral(f.prefix(cut + 1), g.prefix(cut + 1), a);
    auto masked = f;
    for (int i = cut + 1; i < n; ++i) masked.values[i] = 0.0;
    double indicator = stieltjes_integral(masked, g, a);
    std::printf("restriction: direct=%.8f indicator=%.8f diff=%.3e\n", direct,
                indicator, std::abs(direct - indicator));
  }

  // --- holder functional of g(t)=t, alpha=0.4: (1+1/0.4)/ (G(.4)G(.6)) ---
  {
    TimeGrid grid(1.0, 1024);
    auto g = GridFunction::sample(grid, [](double t) { return t; });
    double c = holder_functional(g, FracOrder(0.4));
    double expect = 3.5 / (std::tgamma(0.4) * std::tgamma(0.6));
    std::printf("holder(t) = %.10f expect %.10f diff=%.3e\n", c, expect,
                std::abs(c - expect));
  }

  // --- w_alpha1_norm(1) on [0,1]: 1/(1-alpha) ---
  {
    TimeGrid grid(1.0, 1024);
    auto f = GridFunction::sample(grid, [](double) { return 1.0; });
    double v = w_alpha1_norm(f, FracOrder(0.3));
    std::printf("wnorm(1) = %.12f expect %.12f\n", v, 1.0 / 0.7);
  }

  // --- young bound on an fBm pair ---
  {
    TimeGrid grid(1.0, 512);
    FbmSampler sampler(Hurst(0.75), grid);
    int ok = 0;
    for (int s = 0; s < 20; ++s) {
      auto path = sampler.sample(1000 + s);
      GridFunction gp{grid, path.values};
      auto fsm = GridFunction::sample(grid, [](double t) { return std::cos(t); });
      auto r = young_bound_check(fsm, gp, FracOrder(0.3));
      ok += r.holds;
      if (s < 3) std::printf("young: lhs=%.4f rhs=%.4f\n", r.lhs, r.rhs);
    }
    std::printf("young holds on %d/20 fBm pairs\n", ok);
  }

  // --- fbm increment variance, H=0.75 ---
  {
    int n = 1001;
    TimeGrid grid(10.0, n);  // dt = 0.01
    FbmSampler sampler(Hurst(0.75), grid);
    double sum = 0, sumsq = 0;
    long count = 0;
    for (int s = 0; s < 100; ++s) {
      auto p = sampler.sample(777 + s);
      for (int i = 1; i < n; ++i) {
        double d = p.values[i] - p.values[i - 1];
        sum += d;
        sumsq += d * d;
        ++count;
      }
    }
    double var = sumsq / count - (sum / count) * (sum / count);
    std::printf("fbm increment var = %.6e expect %.6e ratio %.4f\n", var, 1e-3,
                var / 1e-3);
  }

  // --- circulant sampler basic check ---
  {
    int n = 6000;
    TimeGrid grid(1.0, n);
    FbmSampler sampler(Hurst(0.75), grid, FbmSampler::Method::Circulant);
    double m2 = 0;
    for (int s = 0; s < 400; ++s) {
      auto p = sampler.sample(31000 + s);
      m2 += p.values[n - 1] * p.values[n - 1];
    }
    m2 /= 400;
    std::printf("circulant: E[B(1)^2] = %.4f expect 1.0; clipped=%d\n", m2,
                sampler.clipped_eigenvalues());
  }
  return 0;
}
