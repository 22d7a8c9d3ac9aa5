#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "onewave/spline.hpp"

namespace onewave {

/// Rectangular (z, x) domain on which a medium is declared.
struct DomainRect {
  double z_lo = 0.0, z_hi = 1.0;
  double x_lo = 0.0, x_hi = 1.0;

  bool contains(double z, double x) const {
    return z >= z_lo && z <= z_hi && x >= x_lo && x <= x_hi;
  }
  double z_extent() const { return z_hi - z_lo; }
  double x_extent() const { return x_hi - x_lo; }
};

/// One scalar field with its partial derivatives up to second order.
struct FieldEval {
  double v = 0.0;
  double dx = 0.0, dz = 0.0;
  double dxx = 0.0, dxz = 0.0, dzz = 0.0;
};

/// Slowness nu and density rho with all partials, at one (z, x).
struct MediumEval {
  FieldEval nu;
  FieldEval rho;
};

/// First partial derivatives of nu and rho (the public gradient query).
struct MediumGradients {
  double nu_dx = 0.0, nu_dz = 0.0;
  double rho_dx = 0.0, rho_dz = 0.0;
};

namespace medium_model {

struct Uniform {
  double value = 1.0;
};

/// v(z) = v0 + grad * z, nu = 1 / v(z).
struct LinearVelocity {
  double v0 = 1.0;
  double grad = 0.0;
};

/// nu(x) = nu0 + grad * x.
struct LateralLinearSlowness {
  double nu0 = 1.0;
  double grad = 0.0;
};

/// nu(x) = nu0 * (1 + amp * sin(2 pi (x - x0) / wavelength)); periodic in x.
struct SinusoidalSlowness {
  double nu0 = 1.0;
  double amp = 0.0;
  double wavelength = 1.0;
  double x0 = 0.0;
};

/// v(z,x) = v0 * (1 + amp * exp(-((z-zc)^2 + (x-xc)^2) / (2 sigma^2))),
/// nu = 1 / v. amp = +-0.1 gives a +-10% smooth velocity lens.
struct GaussianLensVelocity {
  double v0 = 1.0;
  double amp = 0.0;
  double zc = 0.0, xc = 0.0;
  double sigma = 1.0;
};

/// rho(z) = rho0 + grad * z.
struct LinearDensity {
  double rho0 = 1.0;
  double grad = 0.0;
};

/// rho(z) = rho0 * exp(rate * z).
struct ExpDensity {
  double rho0 = 1.0;
  double rate = 0.0;
};

struct Gridded {
  std::shared_ptr<const TensorSpline2d> spline;
};

using Slowness = std::variant<Uniform, LinearVelocity, LateralLinearSlowness,
                              SinusoidalSlowness, GaussianLensVelocity, Gridded>;
using Density = std::variant<Uniform, LinearDensity, ExpDensity, Gridded>;

}  // namespace medium_model

/// An acoustic medium: slowness nu(z,x) and density rho(z,x), positive and
/// bounded on a declared rectangular domain, with exact (analytic presets)
/// or interpolant-consistent (gridded) partial derivatives.
///
/// Media are immutable after construction and safe to share across threads.
class Medium {
 public:
  Medium(medium_model::Slowness slowness, medium_model::Density density,
         DomainRect domain);

  static Medium homogeneous(double nu0 = 1.0, double rho0 = 1.0,
                            DomainRect d = {});
  static Medium linear_velocity(double v0, double grad, DomainRect d = {},
                                medium_model::Density rho = medium_model::Uniform{});
  static Medium lateral_slowness(double nu0, double grad, DomainRect d = {},
                                 medium_model::Density rho = medium_model::Uniform{});
  static Medium sinusoidal(double nu0, double amp, double wavelength,
                           DomainRect d = {}, double x0 = 0.0,
                           medium_model::Density rho = medium_model::Uniform{});
  static Medium gaussian_lens(double v0, double amp, double zc, double xc,
                              double sigma, DomainRect d = {},
                              medium_model::Density rho = medium_model::Uniform{});

  /// Sample both fields onto a uniform grid and interpolate with a C2
  /// tensor-product cubic spline.
  static Medium gridded(double z0, double dz, std::size_t nz,
                        double x0, double dxs, std::size_t nx,
                        std::vector<double> nu_values,
                        std::vector<double> rho_values);

  /// Load a gridded medium from two grid files (binary + text sidecar),
  /// each 2-d, real, with dims (z, x).
  static Medium from_grid_files(const std::string& nu_path,
                                const std::string& rho_path);

  /// Build a gridded copy of another medium sampled on a uniform grid.
  static Medium resampled(const Medium& src, std::size_t nz, std::size_t nx);

  /// (nu, rho); throws DomainError outside the declared domain.
  std::pair<double, double> values(double z, double x) const;
  /// First partials; throws DomainError outside the declared domain.
  MediumGradients gradients(double z, double x) const;
  /// Everything up to second partials (used by symbol derivatives).
  MediumEval eval(double z, double x) const;

  const DomainRect& domain() const { return domain_; }
  bool contains(double z, double x) const { return domain_.contains(z, x); }

  double nu_min() const { return nu_min_; }
  double nu_max() const { return nu_max_; }
  double rho_min() const { return rho_min_; }
  double rho_max() const { return rho_max_; }

  /// True when nu and rho do not depend on x (enables the per-mode
  /// Fourier-multiplier fast paths).
  bool laterally_uniform() const { return laterally_uniform_; }
  /// True when nu and rho do not depend on z (depth-stepping operators can
  /// then be assembled once).
  bool depth_uniform() const { return depth_uniform_; }

 private:
  void check_domain(double z, double x) const;
  void compute_bounds();

  medium_model::Slowness slowness_;
  medium_model::Density density_;
  DomainRect domain_;
  double nu_min_ = 0.0, nu_max_ = 0.0;
  double rho_min_ = 0.0, rho_max_ = 0.0;
  bool laterally_uniform_ = false;
  bool depth_uniform_ = false;
};

}  // namespace onewave
