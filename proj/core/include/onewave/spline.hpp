#pragma once

#include <cstddef>
#include <vector>

namespace onewave {

/// Value and first two derivatives of an interpolant at a query point.
struct SplineEval {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Natural cubic spline on a uniform knot grid. C2 on the interior; the
/// reported derivatives are the exact derivatives of the interpolant.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(double t0, double dt, std::vector<double> y);

  SplineEval eval(double t) const;
  double value(double t) const { return eval(t).v; }

  double t_begin() const { return t0_; }
  double t_end() const { return t0_ + dt_ * static_cast<double>(n_ - 1); }
  std::size_t size() const { return n_; }

 private:
  double t0_ = 0.0;
  double dt_ = 1.0;
  std::size_t n_ = 0;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at knots, natural BCs
};

/// Tensor-product natural cubic spline on a uniform (z, x) grid.
///
/// Evaluation runs row splines in x first and then a spline in z through the
/// row results. Because the z-spline weights do not depend on the data, the
/// reported partial derivatives are the exact partials of the interpolant.
class TensorSpline2d {
 public:
  struct Eval {
    double v = 0.0;
    double dz = 0.0, dx = 0.0;
    double dzz = 0.0, dxz = 0.0, dxx = 0.0;
  };

  TensorSpline2d() = default;
  /// values is row-major with shape (nz, nx): values[i*nx + j] = f(z_i, x_j).
  TensorSpline2d(double z0, double dz, std::size_t nz,
                 double x0, double dx, std::size_t nx,
                 std::vector<double> values);

  Eval eval(double z, double x) const;

  double z_begin() const { return z0_; }
  double z_end() const { return z0_ + dz_ * static_cast<double>(nz_ - 1); }
  double x_begin() const { return x0_; }
  double x_end() const { return x0_ + dx_ * static_cast<double>(nx_ - 1); }
  double min_value() const { return min_value_; }
  double max_value() const { return max_value_; }

 private:
  double z0_ = 0.0, dz_ = 1.0;
  double x0_ = 0.0, dx_ = 1.0;
  std::size_t nz_ = 0, nx_ = 0;
  std::vector<CubicSpline> rows_;  // one x-spline per z level
  double min_value_ = 0.0, max_value_ = 0.0;
};

}  // namespace onewave
