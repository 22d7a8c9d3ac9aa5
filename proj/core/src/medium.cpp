#include "onewave/medium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "onewave/errors.hpp"
#include "onewave/grid_file.hpp"

namespace onewave {
namespace {

using namespace medium_model;

FieldEval eval_slowness(const Slowness& s, double z, double x) {
  FieldEval e;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          e.v = m.value;
        } else if constexpr (std::is_same_v<T, LinearVelocity>) {
          const double w = m.v0 + m.grad * z;
          e.v = 1.0 / w;
          e.dz = -m.grad / (w * w);
          e.dzz = 2.0 * m.grad * m.grad / (w * w * w);
        } else if constexpr (std::is_same_v<T, LateralLinearSlowness>) {
          e.v = m.nu0 + m.grad * x;
          e.dx = m.grad;
        } else if constexpr (std::is_same_v<T, SinusoidalSlowness>) {
          const double k = 2.0 * std::numbers::pi / m.wavelength;
          const double ph = k * (x - m.x0);
          e.v = m.nu0 * (1.0 + m.amp * std::sin(ph));
          e.dx = m.nu0 * m.amp * k * std::cos(ph);
          e.dxx = -m.nu0 * m.amp * k * k * std::sin(ph);
        } else if constexpr (std::is_same_v<T, GaussianLensVelocity>) {
          const double s2 = m.sigma * m.sigma;
          const double uz = (z - m.zc) / s2;
          const double ux = (x - m.xc) / s2;
          const double g = std::exp(-0.5 * ((z - m.zc) * uz + (x - m.xc) * ux));
          const double v = m.v0 * (1.0 + m.amp * g);
          const double gv = m.v0 * m.amp * g;  // common factor of v-derivatives
          const double v_x = -gv * ux;
          const double v_z = -gv * uz;
          const double v_xx = gv * (ux * ux - 1.0 / s2);
          const double v_zz = gv * (uz * uz - 1.0 / s2);
          const double v_xz = gv * ux * uz;
          const double iv = 1.0 / v;
          e.v = iv;
          e.dx = -v_x * iv * iv;
          e.dz = -v_z * iv * iv;
          e.dxx = (2.0 * v_x * v_x - v * v_xx) * iv * iv * iv;
          e.dzz = (2.0 * v_z * v_z - v * v_zz) * iv * iv * iv;
          e.dxz = (2.0 * v_x * v_z - v * v_xz) * iv * iv * iv;
        } else if constexpr (std::is_same_v<T, Gridded>) {
          const auto g = m.spline->eval(z, x);
          e.v = g.v;
          e.dx = g.dx;
          e.dz = g.dz;
          e.dxx = g.dxx;
          e.dxz = g.dxz;
          e.dzz = g.dzz;
        }
      },
      s);
  return e;
}

FieldEval eval_density(const Density& d, double z, double x) {
  FieldEval e;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          e.v = m.value;
        } else if constexpr (std::is_same_v<T, LinearDensity>) {
          e.v = m.rho0 + m.grad * z;
          e.dz = m.grad;
        } else if constexpr (std::is_same_v<T, ExpDensity>) {
          e.v = m.rho0 * std::exp(m.rate * z);
          e.dz = m.rate * e.v;
          e.dzz = m.rate * m.rate * e.v;
        } else if constexpr (std::is_same_v<T, Gridded>) {
          const auto g = m.spline->eval(z, x);
          e.v = g.v;
          e.dx = g.dx;
          e.dz = g.dz;
          e.dxx = g.dxx;
          e.dxz = g.dxz;
          e.dzz = g.dzz;
        }
      },
      d);
  return e;
}

bool slowness_laterally_uniform(const Slowness& s) {
  return std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        return std::is_same_v<T, Uniform> || std::is_same_v<T, LinearVelocity>;
      },
      s);
}

bool slowness_depth_uniform(const Slowness& s) {
  return std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        return std::is_same_v<T, Uniform> ||
               std::is_same_v<T, LateralLinearSlowness> ||
               std::is_same_v<T, SinusoidalSlowness>;
      },
      s);
}

bool density_laterally_uniform(const Density& d) {
  return !std::holds_alternative<Gridded>(d);
}

bool density_depth_uniform(const Density& d) {
  return std::holds_alternative<Uniform>(d);
}

}  // namespace

Medium::Medium(medium_model::Slowness slowness, medium_model::Density density,
               DomainRect domain)
    : slowness_(std::move(slowness)),
      density_(std::move(density)),
      domain_(domain) {
  if (!(domain_.z_hi > domain_.z_lo) || !(domain_.x_hi > domain_.x_lo))
    throw ConfigError("medium: degenerate domain");
  laterally_uniform_ = slowness_laterally_uniform(slowness_) &&
                       density_laterally_uniform(density_);
  depth_uniform_ =
      slowness_depth_uniform(slowness_) && density_depth_uniform(density_);
  compute_bounds();
  if (nu_min_ <= 0.0 || rho_min_ <= 0.0)
    throw ConfigError("medium: nu and rho must be positive on the domain");
}

void Medium::compute_bounds() {
  constexpr std::size_t kSamples = 101;
  nu_min_ = rho_min_ = std::numeric_limits<double>::infinity();
  nu_max_ = rho_max_ = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kSamples; ++i) {
    const double z = domain_.z_lo + domain_.z_extent() * static_cast<double>(i) /
                                        static_cast<double>(kSamples - 1);
    for (std::size_t j = 0; j < kSamples; ++j) {
      const double x = domain_.x_lo + domain_.x_extent() * static_cast<double>(j) /
                                          static_cast<double>(kSamples - 1);
      const double nu = eval_slowness(slowness_, z, x).v;
      const double rho = eval_density(density_, z, x).v;
      nu_min_ = std::min(nu_min_, nu);
      nu_max_ = std::max(nu_max_, nu);
      rho_min_ = std::min(rho_min_, rho);
      rho_max_ = std::max(rho_max_, rho);
    }
  }
}

void Medium::check_domain(double z, double x) const {
  if (!domain_.contains(z, x)) {
    std::ostringstream os;
    os << "medium: query (z=" << z << ", x=" << x << ") outside domain ["
       << domain_.z_lo << "," << domain_.z_hi << "]x[" << domain_.x_lo << ","
       << domain_.x_hi << "]";
    throw DomainError(os.str());
  }
}

std::pair<double, double> Medium::values(double z, double x) const {
  check_domain(z, x);
  return {eval_slowness(slowness_, z, x).v, eval_density(density_, z, x).v};
}

MediumGradients Medium::gradients(double z, double x) const {
  check_domain(z, x);
  const FieldEval nu = eval_slowness(slowness_, z, x);
  const FieldEval rho = eval_density(density_, z, x);
  return {nu.dx, nu.dz, rho.dx, rho.dz};
}

MediumEval Medium::eval(double z, double x) const {
  check_domain(z, x);
  return {eval_slowness(slowness_, z, x), eval_density(density_, z, x)};
}

Medium Medium::homogeneous(double nu0, double rho0, DomainRect d) {
  return Medium(medium_model::Uniform{nu0}, medium_model::Uniform{rho0}, d);
}

Medium Medium::linear_velocity(double v0, double grad, DomainRect d,
                               medium_model::Density rho) {
  return Medium(medium_model::LinearVelocity{v0, grad}, std::move(rho), d);
}

Medium Medium::lateral_slowness(double nu0, double grad, DomainRect d,
                                medium_model::Density rho) {
  return Medium(medium_model::LateralLinearSlowness{nu0, grad}, std::move(rho), d);
}

Medium Medium::sinusoidal(double nu0, double amp, double wavelength,
                          DomainRect d, double x0, medium_model::Density rho) {
  return Medium(medium_model::SinusoidalSlowness{nu0, amp, wavelength, x0},
                std::move(rho), d);
}

Medium Medium::gaussian_lens(double v0, double amp, double zc, double xc,
                             double sigma, DomainRect d,
                             medium_model::Density rho) {
  return Medium(medium_model::GaussianLensVelocity{v0, amp, zc, xc, sigma},
                std::move(rho), d);
}

Medium Medium::gridded(double z0, double dz, std::size_t nz,
                       double x0, double dxs, std::size_t nx,
                       std::vector<double> nu_values,
                       std::vector<double> rho_values) {
  auto nu = std::make_shared<const TensorSpline2d>(z0, dz, nz, x0, dxs, nx,
                                                   std::move(nu_values));
  auto rho = std::make_shared<const TensorSpline2d>(z0, dz, nz, x0, dxs, nx,
                                                    std::move(rho_values));
  DomainRect d{nu->z_begin(), nu->z_end(), nu->x_begin(), nu->x_end()};
  return Medium(medium_model::Gridded{std::move(nu)},
                medium_model::Gridded{std::move(rho)}, d);
}

Medium Medium::from_grid_files(const std::string& nu_path,
                               const std::string& rho_path) {
  const GridFile nu = GridFile::read(nu_path);
  const GridFile rho = GridFile::read(rho_path);
  for (const GridFile* g : {&nu, &rho}) {
    if (g->dims.size() != 2 || g->is_complex)
      throw ConfigError("gridded medium: expected a 2-d real grid file");
  }
  if (nu.dims != rho.dims)
    throw ConfigError("gridded medium: nu and rho grids differ");
  const GridDim& dz = nu.dims[0];
  const GridDim& dx = nu.dims[1];
  return gridded(dz.origin, dz.spacing, dz.size, dx.origin, dx.spacing, dx.size,
                 nu.data, rho.data);
}

Medium Medium::resampled(const Medium& src, std::size_t nz, std::size_t nx) {
  if (nz < 2 || nx < 2) throw ConfigError("resampled: need at least 2x2 samples");
  const DomainRect& d = src.domain();
  const double dz = d.z_extent() / static_cast<double>(nz - 1);
  const double dxs = d.x_extent() / static_cast<double>(nx - 1);
  std::vector<double> nu(nz * nx), rho(nz * nx);
  for (std::size_t i = 0; i < nz; ++i) {
    for (std::size_t j = 0; j < nx; ++j) {
      const auto [n, r] = src.values(d.z_lo + dz * static_cast<double>(i),
                                     d.x_lo + dxs * static_cast<double>(j));
      nu[i * nx + j] = n;
      rho[i * nx + j] = r;
    }
  }
  return gridded(d.z_lo, dz, nz, d.x_lo, dxs, nx, std::move(nu), std::move(rho));
}

}  // namespace onewave
