#pragma once

#include <Eigen/Core>

#include "fraclab/errors.hpp"
#include "fraclab/time_grid.hpp"

namespace fraclab {

/// Fractional order in (0,1). Pathwise integration against an fBm with Hurst
/// index H additionally requires alpha in (1-H, 1/2); that window is enforced
/// where the combination is used, not here.
struct FracOrder {
  double value;
  explicit FracOrder(double a) : value(a) {
    if (!(a > 0.0 && a < 1.0)) throw Error("fractional order must lie in (0,1)");
  }
};

/// Left Weyl derivative of order alpha on the grid:
///   D_{0+}^a f(t) = (f(t) t^{-a} + a * int_0^t (f(t)-f(u)) (t-u)^{-a-1} du)
///                   / Gamma(1-a).
///
/// Singular kernels are never sampled: each cell is integrated in closed form
/// against an interpolant of f. The left-endpoint behavior typical of
/// fractional antiderivatives is captured by a linear two-node fit onto
/// span{1, t^a, t^{1+a}} whose derivative is evaluated analytically; the
/// remainder goes through piecewise-linear kernel moments. The map f -> D f
/// stays linear.
///
/// Node 0 is a convention, not an approximation: 0 when f(0) = 0, NaN
/// otherwise (the derivative is genuinely non-finite there).
GridFunction weyl_left(const GridFunction& f, FracOrder alpha);

/// Right Weyl derivative, mirror image of weyl_left under t -> T - t. The
/// (-1)^alpha prefactor of the right-sided convention is carried symbolically
/// (the pairing in the Stieltjes integral cancels it), so the returned values
/// are real.
GridFunction weyl_right(const GridFunction& f, FracOrder alpha);

/// Left Riemann-Liouville integral
///   I_{0+}^a phi(t) = (1/Gamma(a)) int_0^t (t-u)^{a-1} phi(u) du,
/// exact on piecewise-linear phi.
GridFunction rl_integral_left(const GridFunction& phi, FracOrder alpha);

/// The W^{alpha,1} seminorm
///   int_0^T ( |f(s)| s^{-a} + int_0^s |f(s)-f(u)| (s-u)^{-a-1} du ) ds.
double w_alpha1_norm(const GridFunction& f, FracOrder alpha);

/// Hoelder-type functional of the integrator,
///   C_a(g) = sup_{s<t} ( |g(t)-g(s)|/(t-s)^{1-a}
///            + int_s^t |g(u)-g(s)|/(u-s)^{2-a} du ) / (Gamma(a) Gamma(1-a)),
/// with the sup taken over all grid node pairs. Non-decreasing under
/// refinement of the same continuous g.
double holder_functional(const GridFunction& g, FracOrder alpha);

/// Generalized (Young) Stieltjes integral int_0^T f dg, defined through the
/// fractional-derivative pairing of the left derivative of f with the right
/// derivative of g - g(T). The constant part of f is paired exactly with the
/// total increment g(T) - g(0), so constant integrands are reproduced to
/// machine precision and f(0) != 0 needs no special handling.
///
/// Throws Error if a non-finite value appears anywhere in the pairing.
double stieltjes_integral(const GridFunction& f, const GridFunction& g,
                          FracOrder alpha);

struct YoungBound {
  double lhs = 0.0;   // |int f dg|
  double rhs = 0.0;   // C_alpha(g) * ||f||_{alpha,1}
  bool holds = false; // lhs <= rhs * (1 + 1e-8)
};

/// Checks the pathwise bound |int_0^T f dg| <= C_alpha(g) ||f||_{alpha,1}.
YoungBound young_bound_check(const GridFunction& f, const GridFunction& g,
                             FracOrder alpha);

}  // namespace fraclab
