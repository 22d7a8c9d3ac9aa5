#include "onewave/spline.hpp"

#include <algorithm>
#include <cmath>

#include "onewave/errors.hpp"

namespace onewave {

CubicSpline::CubicSpline(double t0, double dt, std::vector<double> y)
    : t0_(t0), dt_(dt), n_(y.size()), y_(std::move(y)), m_(n_, 0.0) {
  if (n_ == 0) throw ConfigError("spline: empty data");
  if (dt_ <= 0.0) throw ConfigError("spline: non-positive spacing");
  if (n_ < 3) return;  // m stays 0: linear interpolant

  // Thomas solve of the natural-spline tridiagonal system
  //   m[i-1] + 4 m[i] + m[i+1] = 6 (y[i-1] - 2 y[i] + y[i+1]) / dt^2.
  const std::size_t k = n_ - 2;
  std::vector<double> c(k, 0.0), d(k, 0.0);
  const double inv_h2 = 1.0 / (dt_ * dt_);
  for (std::size_t i = 0; i < k; ++i)
    d[i] = 6.0 * (y_[i] - 2.0 * y_[i + 1] + y_[i + 2]) * inv_h2;
  c[0] = 1.0 / 4.0;
  d[0] = d[0] / 4.0;
  for (std::size_t i = 1; i < k; ++i) {
    const double w = 4.0 - c[i - 1];
    c[i] = 1.0 / w;
    d[i] = (d[i] - d[i - 1]) / w;
  }
  for (std::size_t i = k; i-- > 1;) d[i - 1] -= c[i - 1] * d[i];
  for (std::size_t i = 0; i < k; ++i) m_[i + 1] = d[i];
}

SplineEval CubicSpline::eval(double t) const {
  if (n_ == 1) return {y_[0], 0.0, 0.0};
  double u = (t - t0_) / dt_;
  auto i = static_cast<std::ptrdiff_t>(std::floor(u));
  i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n_) - 2);
  const auto idx = static_cast<std::size_t>(i);
  const double a = t0_ + dt_ * static_cast<double>(idx);      // left knot
  const double r = a + dt_ - t;                                // t_{i+1} - t
  const double l = t - a;                                      // t - t_i
  const double h = dt_;
  const double ma = m_[idx], mb = m_[idx + 1];
  const double ca = y_[idx] / h - ma * h / 6.0;
  const double cb = y_[idx + 1] / h - mb * h / 6.0;
  SplineEval e;
  e.v = ma * r * r * r / (6.0 * h) + mb * l * l * l / (6.0 * h) + ca * r + cb * l;
  e.d1 = -ma * r * r / (2.0 * h) + mb * l * l / (2.0 * h) - ca + cb;
  e.d2 = (ma * r + mb * l) / h;
  return e;
}

TensorSpline2d::TensorSpline2d(double z0, double dz, std::size_t nz,
                               double x0, double dx, std::size_t nx,
                               std::vector<double> values)
    : z0_(z0), dz_(dz), x0_(x0), dx_(dx), nz_(nz), nx_(nx) {
  if (nz == 0 || nx == 0 || values.size() != nz * nx)
    throw ConfigError("tensor spline: shape mismatch");
  rows_.reserve(nz);
  for (std::size_t i = 0; i < nz; ++i) {
    std::vector<double> row(values.begin() + static_cast<std::ptrdiff_t>(i * nx),
                            values.begin() + static_cast<std::ptrdiff_t>((i + 1) * nx));
    rows_.emplace_back(x0, dx, std::move(row));
  }
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  min_value_ = *lo;
  max_value_ = *hi;
}

TensorSpline2d::Eval TensorSpline2d::eval(double z, double x) const {
  std::vector<double> f(nz_), fx(nz_), fxx(nz_);
  for (std::size_t i = 0; i < nz_; ++i) {
    const SplineEval e = rows_[i].eval(x);
    f[i] = e.v;
    fx[i] = e.d1;
    fxx[i] = e.d2;
  }
  const CubicSpline sf(z0_, dz_, std::move(f));
  const CubicSpline sfx(z0_, dz_, std::move(fx));
  const CubicSpline sfxx(z0_, dz_, std::move(fxx));
  const SplineEval ef = sf.eval(z);
  const SplineEval efx = sfx.eval(z);
  const SplineEval efxx = sfxx.eval(z);
  Eval out;
  out.v = ef.v;
  out.dz = ef.d1;
  out.dzz = ef.d2;
  out.dx = efx.v;
  out.dxz = efx.d1;
  out.dxx = efxx.v;
  return out;
}

}  // namespace onewave
