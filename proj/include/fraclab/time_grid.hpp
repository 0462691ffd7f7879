#pragma once

#include <Eigen/Core>

#include "fraclab/errors.hpp"

namespace fraclab {

/// Uniform time grid t_i = i * T / (n - 1), i = 0..n-1.
struct TimeGrid {
  double horizon = 1.0;
  Eigen::Index count = 2;

  TimeGrid() = default;
  TimeGrid(double T, Eigen::Index n) : horizon(T), count(n) {
    if (!(T > 0.0)) throw Error("TimeGrid: horizon must be positive");
    if (n < 2) throw Error("TimeGrid: need at least 2 nodes");
  }

  double dt() const { return horizon / double(count - 1); }
  double node(Eigen::Index i) const { return double(i) * dt(); }

  Eigen::VectorXd nodes() const {
    return Eigen::VectorXd::LinSpaced(count, 0.0, horizon);
  }

  bool operator==(const TimeGrid& other) const {
    return count == other.count && horizon == other.horizon;
  }
};

/// Scalar function sampled on a uniform grid; the workhorse carrier for the
/// fractional-calculus operators.
struct GridFunction {
  TimeGrid grid;
  Eigen::VectorXd values;

  GridFunction() = default;
  GridFunction(TimeGrid g, Eigen::VectorXd v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.count)
      throw Error("GridFunction: value count does not match grid");
  }

  template <typename F>
  static GridFunction sample(const TimeGrid& g, F&& f) {
    Eigen::VectorXd v(g.count);
    for (Eigen::Index i = 0; i < g.count; ++i) v[i] = f(g.node(i));
    return GridFunction(g, std::move(v));
  }

  Eigen::Index size() const { return values.size(); }

  /// Piecewise-linear interpolation; clamps to the grid range.
  double at(double t) const {
    const double dt = grid.dt();
    if (t <= 0.0) return values[0];
    if (t >= grid.horizon) return values[grid.count - 1];
    const auto j = static_cast<Eigen::Index>(t / dt);
    const double w = (t - double(j) * dt) / dt;
    return (1.0 - w) * values[j] + w * values[j + 1];
  }

  /// First `count` nodes as a stand-alone function on [0, t_{count-1}].
  GridFunction prefix(Eigen::Index count) const {
    if (count < 2 || count > grid.count) throw Error("prefix: bad node count");
    return GridFunction(TimeGrid(grid.node(count - 1), count),
                        values.head(count));
  }

  /// Trapezoid antiderivative at the nodes, P[0] = 0.
  Eigen::VectorXd trapezoid_prefix() const {
    Eigen::VectorXd p(grid.count);
    p[0] = 0.0;
    const double h = grid.dt();
    for (Eigen::Index i = 1; i < grid.count; ++i)
      p[i] = p[i - 1] + 0.5 * h * (values[i - 1] + values[i]);
    return p;
  }
};

/// Trapezoid integral over the whole grid.
inline double trapezoid(const GridFunction& f) {
  const double h = f.grid.dt();
  double s = 0.5 * (f.values[0] + f.values[f.size() - 1]);
  s += f.values.segment(1, f.size() - 2).sum();
  return s * h;
}

}  // namespace fraclab
