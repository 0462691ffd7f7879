#include "fraclab/frac_calc.hpp"

#include <cmath>
#include <limits>

namespace fraclab {

namespace {

using Eigen::Index;
using Eigen::VectorXd;

/// Closed-form cell moments of the kernel v^{-theta} on a uniform grid with
/// step h:  I0[lag] = int over [(lag-1)h, lag*h] of v^{-theta} dv and
/// I1[lag] = same of v^{1-theta}. Valid for theta in (0,1) u (1,2); the
/// operators here only ever use theta in {a, 1-a, 1+a, 2-a} with a in (0,1),
/// so theta never hits 1 or 2. For theta > 1, I0[1] diverges and callers must
/// use the anchored-cell form (integrand vanishing at v = 0) instead.
struct KernelMoments {
  double theta, h;
  VectorXd i0, i1;

  KernelMoments(double theta_, double h_, Index n) : theta(theta_), h(h_) {
    VectorXd p1(n), p2(n);
    for (Index k = 0; k < n; ++k) {
      const double v = double(k) * h;
      p1[k] = std::pow(v, 1.0 - theta);  // +inf at k=0 when theta > 1
      p2[k] = std::pow(v, 2.0 - theta);
    }
    i0.resize(n);
    i1.resize(n);
    i0[0] = i1[0] = 0.0;
    for (Index k = 1; k < n; ++k) {
      i0[k] = (p1[k] - p1[k - 1]) / (1.0 - theta);
      i1[k] = (p2[k] - p2[k - 1]) / (2.0 - theta);
    }
  }
};

/// int_0^{t_i} d(u) (t_i - u)^{-theta} du for piecewise-linear d given at the
/// nodes, with theta in (1,2) and d[i] == 0 (anchored difference data).
double anchored_left_integral(const double* d, Index i,
                              const KernelMoments& m) {
  if (i == 0) return 0.0;
  double acc = d[i - 1] * m.i1[1] / m.h;  // lag 1, inner value vanishes
  for (Index lag = 2; lag <= i; ++lag) {
    const double dl = d[i - lag];
    const double dr = d[i - lag + 1];
    const double a = double(lag - 1) * m.h;
    acc += dr * m.i0[lag] + (dl - dr) / m.h * (m.i1[lag] - a * m.i0[lag]);
  }
  return acc;
}

/// int_{t_i}^{T} d(u) (u - t_i)^{-theta} du, theta in (1,2), d[i] == 0.
double anchored_right_integral(const double* d, Index i, Index n,
                               const KernelMoments& m) {
  const Index last = n - 1 - i;
  if (last == 0) return 0.0;
  double acc = d[i + 1] * m.i1[1] / m.h;
  for (Index lag = 2; lag <= last; ++lag) {
    const double dl = d[i + lag - 1];
    const double dr = d[i + lag];
    const double a = double(lag - 1) * m.h;
    acc += dl * m.i0[lag] + (dr - dl) / m.h * (m.i1[lag] - a * m.i0[lag]);
  }
  return acc;
}

/// int_0^T p(s) s^{-theta} ds for piecewise-linear p, theta in (0,1).
double weighted_integral_from_origin(const VectorXd& p,
                                     const KernelMoments& m) {
  const Index n = p.size();
  double acc = 0.0;
  for (Index k = 0; k + 1 < n; ++k) {
    const double a = double(k) * m.h;
    const Index lag = k + 1;
    acc += p[k] * m.i0[lag] +
           (p[k + 1] - p[k]) / m.h * (m.i1[lag] - a * m.i0[lag]);
  }
  return acc;
}

/// Coefficients of the linear fit of f onto span{1, t^a, t^{1+a}} pinned at
/// nodes 0, 1 and 2. Returns {a0, a1, a2}; zero higher coefficients when the
/// grid has only two nodes.
struct EndpointFit {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0;
};

EndpointFit fit_endpoint_basis(const GridFunction& f, double alpha) {
  EndpointFit fit;
  fit.a0 = f.values[0];
  if (f.size() < 3) return fit;
  const double t1 = f.grid.node(1);
  const double t2 = f.grid.node(2);
  const double g1 = f.values[1] - fit.a0;
  const double g2 = f.values[2] - fit.a0;
  const double m11 = std::pow(t1, alpha), m12 = std::pow(t1, 1.0 + alpha);
  const double m21 = std::pow(t2, alpha), m22 = std::pow(t2, 1.0 + alpha);
  const double det = m11 * m22 - m12 * m21;  // never zero on a valid grid
  fit.a1 = (g1 * m22 - g2 * m12) / det;
  fit.a2 = (g2 * m11 - g1 * m21) / det;
  return fit;
}

}  // namespace

GridFunction weyl_left(const GridFunction& f, FracOrder alpha) {
  const double a = alpha.value;
  const Index n = f.size();
  const double h = f.grid.dt();
  const double inv_gamma = 1.0 / std::tgamma(1.0 - a);

  const EndpointFit fit = fit_endpoint_basis(f, a);
  // D of the fitted part, exactly: D[1] = t^{-a}/Gamma(1-a),
  // D[t^a] = Gamma(1+a), D[t^{1+a}] = Gamma(2+a) t.
  const double d_pow0 = std::tgamma(1.0 + a);
  const double d_pow1 = std::tgamma(2.0 + a);

  VectorXd r(n);
  for (Index i = 0; i < n; ++i) {
    const double t = f.grid.node(i);
    r[i] = f.values[i] - fit.a0 - fit.a1 * std::pow(t, a) -
           fit.a2 * std::pow(t, 1.0 + a);
  }

  KernelMoments m(1.0 + a, h, n);
  GridFunction out{f.grid, VectorXd(n)};
  out.values[0] = (f.values[0] == 0.0)
                      ? 0.0
                      : std::numeric_limits<double>::quiet_NaN();
  VectorXd d(n);
  for (Index i = 1; i < n; ++i) {
    const double t = f.grid.node(i);
    for (Index j = 0; j <= i; ++j) d[j] = r[i] - r[j];
    const double diff = anchored_left_integral(d.data(), i, m);
    const double bracket = r[i] * std::pow(t, -a) + a * diff;
    out.values[i] = fit.a0 * std::pow(t, -a) * inv_gamma + fit.a1 * d_pow0 +
                    fit.a2 * d_pow1 * t + bracket * inv_gamma;
  }
  return out;
}

GridFunction weyl_right(const GridFunction& f, FracOrder alpha) {
  GridFunction reflected{f.grid, f.values.reverse()};
  GridFunction dl = weyl_left(reflected, alpha);
  return GridFunction{f.grid, dl.values.reverse()};
}

GridFunction rl_integral_left(const GridFunction& phi, FracOrder alpha) {
  const double a = alpha.value;
  const Index n = phi.size();
  const double h = phi.grid.dt();
  const double inv_gamma = 1.0 / std::tgamma(a);

  // Kernel v^{a-1} = v^{-theta} with theta = 1 - a in (0,1).
  KernelMoments m(1.0 - a, h, n);
  GridFunction out{phi.grid, VectorXd::Zero(n)};
  for (Index i = 1; i < n; ++i) {
    double acc = 0.0;
    for (Index lag = 1; lag <= i; ++lag) {
      const double pl = phi.values[i - lag];
      const double pr = phi.values[i - lag + 1];
      const double lo = double(lag - 1) * h;
      acc += pr * m.i0[lag] + (pl - pr) / h * (m.i1[lag] - lo * m.i0[lag]);
    }
    out.values[i] = acc * inv_gamma;
  }
  return out;
}

double w_alpha1_norm(const GridFunction& f, FracOrder alpha) {
  const double a = alpha.value;
  const Index n = f.size();
  const double h = f.grid.dt();

  KernelMoments m_direct(a, h, n);
  const double first = weighted_integral_from_origin(
      f.values.cwiseAbs(), m_direct);

  KernelMoments m_diff(1.0 + a, h, n);
  GridFunction inner{f.grid, VectorXd::Zero(n)};
  VectorXd d(n);
  for (Index i = 1; i < n; ++i) {
    for (Index j = 0; j <= i; ++j) d[j] = std::abs(f.values[i] - f.values[j]);
    inner.values[i] = anchored_left_integral(d.data(), i, m_diff);
  }
  return first + trapezoid(inner);
}

double holder_functional(const GridFunction& g, FracOrder alpha) {
  const double a = alpha.value;
  const Index n = g.size();
  if (n < 2) throw Error("holder_functional: need at least 2 nodes");
  const double h = g.grid.dt();
  const double scale = 1.0 / (std::tgamma(a) * std::tgamma(1.0 - a));

  KernelMoments m(2.0 - a, h, n);
  VectorXd holder_pow(n);
  for (Index k = 1; k < n; ++k)
    holder_pow[k] = std::pow(double(k) * h, 1.0 - a);

  double best = 0.0;
  for (Index i = 0; i + 1 < n; ++i) {
    const double gi = g.values[i];
    double inner = std::abs(g.values[i + 1] - gi) * m.i1[1] / h;
    best = std::max(best,
                    std::abs(g.values[i + 1] - gi) / holder_pow[1] + inner);
    for (Index j = i + 2; j < n; ++j) {
      const Index lag = j - i;
      const double dl = std::abs(g.values[j - 1] - gi);
      const double dr = std::abs(g.values[j] - gi);
      const double lo = double(lag - 1) * h;
      inner += dl * m.i0[lag] + (dr - dl) / h * (m.i1[lag] - lo * m.i0[lag]);
      best = std::max(best, dr / holder_pow[lag] + inner);
    }
  }
  return best * scale;
}

double stieltjes_integral(const GridFunction& f, const GridFunction& g,
                          FracOrder alpha) {
  if (!(f.grid == g.grid))
    throw Error("stieltjes_integral: f and g must share a grid");
  const double a = alpha.value;
  const Index n = f.size();
  const double h = f.grid.dt();

  // Right-sided derivative bracket of g_{T-} = g - g(T), order 1 - a:
  //   Phi(t) = ( g_T-(t) (T-t)^{a-1}
  //              + (1-a) int_t^T (g_T-(t)-g_T-(u)) (u-t)^{a-2} du ) / Gamma(a)
  const double g_end = g.values[n - 1];
  VectorXd hv = g.values.array() - g_end;

  KernelMoments m_right(2.0 - a, h, n);
  const double inv_gamma_a = 1.0 / std::tgamma(a);
  VectorXd phi(n);
  phi[n - 1] = 0.0;
  VectorXd d(n);
  for (Index i = 0; i + 1 < n; ++i) {
    const double tail = double(n - 1 - i) * h;  // T - t_i
    for (Index j = i; j < n; ++j) d[j] = hv[i] - hv[j];
    const double diff = anchored_right_integral(d.data(), i, n, m_right);
    phi[i] = (hv[i] * std::pow(tail, a - 1.0) + (1.0 - a) * diff) * inv_gamma_a;
  }

  // Left bracket of f with its constant part split off: the constant pairs
  // exactly with the total increment of g.
  const double c0 = f.values[0];
  VectorXd ft = f.values.array() - c0;

  KernelMoments m_left(1.0 + a, h, n);
  VectorXd jdiff(n);
  jdiff[0] = 0.0;
  for (Index i = 1; i < n; ++i) {
    for (Index j = 0; j <= i; ++j) d[j] = ft[i] - ft[j];
    jdiff[i] = anchored_left_integral(d.data(), i, m_left);
  }

  KernelMoments m_origin(a, h, n);
  const VectorXd product = ft.cwiseProduct(phi);
  const double s1 = weighted_integral_from_origin(product, m_origin);
  const double s2 = trapezoid(GridFunction{f.grid, jdiff.cwiseProduct(phi)});

  const double value =
      -(s1 + a * s2) / std::tgamma(1.0 - a) + c0 * (g_end - g.values[0]);
  if (!std::isfinite(value))
    throw Error("stieltjes_integral: non-finite value in the derivative "
                "pairing (check integrability of the inputs)");
  return value;
}

YoungBound young_bound_check(const GridFunction& f, const GridFunction& g,
                             FracOrder alpha) {
  YoungBound r;
  r.lhs = std::abs(stieltjes_integral(f, g, alpha));
  r.rhs = holder_functional(g, alpha) * w_alpha1_norm(f, alpha);
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-8);
  return r;
}

}  // namespace fraclab
