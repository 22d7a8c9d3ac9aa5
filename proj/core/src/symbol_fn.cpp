#include "onewave/symbol_calc.hpp"

#include <cmath>

#include "onewave/errors.hpp"

namespace onewave {

namespace {
using cd = std::complex<double>;

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }
}  // namespace

SymbolFn::SymbolFn(int order, Eval f) : order_(order), eval_(std::move(f)) {
  if (!eval_) throw ConfigError("SymbolFn: empty evaluator");
}

SymbolFn& SymbolFn::with_partial(int dx, int dxi, Eval f) {
  partials_[{dx, dxi}] = std::move(f);
  return *this;
}

SymbolFn& SymbolFn::with_z_partial(Eval f) {
  z_partial_ = std::move(f);
  return *this;
}

SymbolFn& SymbolFn::without_fd_fallback() {
  allow_fd_ = false;
  return *this;
}

SymbolFn& SymbolFn::with_x_scale(double s) {
  x_scale_ = s;
  return *this;
}

SymbolFn& SymbolFn::with_valid_cone(ConeConfig cone) {
  valid_cone_ = cone;
  return *this;
}

cd SymbolFn::operator()(double z, double x, double xi, double tau) const {
  return eval_(z, x, xi, tau);
}

cd SymbolFn::partial(int dx, int dxi, double z, double x, double xi,
                     double tau) const {
  if (dx < 0 || dxi < 0) throw ConfigError("SymbolFn::partial: negative order");
  if (dx == 0 && dxi == 0) return eval_(z, x, xi, tau);
  if (auto it = partials_.find({dx, dxi}); it != partials_.end())
    return it->second(z, x, xi, tau);
  if (!allow_fd_)
    throw CapabilityError("SymbolFn: derivative (" + std::to_string(dx) + "," +
                          std::to_string(dxi) + ") not available");
  // Reduce the xi order first, then the x order, by centered differences of
  // the next-lower partial (which may itself be analytic).
  if (dxi > 0) {
    const double h = std::max(1e-5 * (1.0 + std::abs(xi)), 1e-5);
    return (partial(dx, dxi - 1, z, x, xi + h, tau) -
            partial(dx, dxi - 1, z, x, xi - h, tau)) /
           (2.0 * h);
  }
  const double h = 1e-5 * x_scale_;
  return (partial(dx - 1, 0, z, x + h, xi, tau) -
          partial(dx - 1, 0, z, x - h, xi, tau)) /
         (2.0 * h);
}

cd SymbolFn::partial_z(double z, double x, double xi, double tau) const {
  if (z_partial_) return (*z_partial_)(z, x, xi, tau);
  if (!allow_fd_) throw CapabilityError("SymbolFn: z derivative not available");
  const double h = 1e-5 * x_scale_;
  return (eval_(z + h, x, xi, tau) - eval_(z - h, x, xi, tau)) / (2.0 * h);
}

namespace {
// 1/(k! i^k) for k = 0, 1, 2.
constexpr cd kComposeCoeff[3] = {cd(1.0, 0.0), cd(0.0, -1.0), cd(-0.5, 0.0)};
}  // namespace

SymbolFn compose(const SymbolFn& A, const SymbolFn& B, int max_order) {
  if (max_order < 0 || max_order > 2)
    throw ConfigError("compose: max_order must be 0, 1 or 2");

  auto eval = [A, B, max_order](double z, double x, double xi, double tau) {
    cd acc(0.0, 0.0);
    for (int k = 0; k <= max_order; ++k)
      acc += kComposeCoeff[k] * A.partial(0, k, z, x, xi, tau) *
             B.partial(k, 0, z, x, xi, tau);
    return acc;
  };
  SymbolFn out(A.order() + B.order(), eval);
  // First partials by the product rule; anything deeper falls back to FD.
  out.with_partial(
      1, 0, [A, B, max_order](double z, double x, double xi, double tau) {
        cd acc(0.0, 0.0);
        for (int k = 0; k <= max_order; ++k)
          acc += kComposeCoeff[k] *
                 (A.partial(1, k, z, x, xi, tau) * B.partial(k, 0, z, x, xi, tau) +
                  A.partial(0, k, z, x, xi, tau) * B.partial(k + 1, 0, z, x, xi, tau));
        return acc;
      });
  out.with_partial(
      0, 1, [A, B, max_order](double z, double x, double xi, double tau) {
        cd acc(0.0, 0.0);
        for (int k = 0; k <= max_order; ++k)
          acc += kComposeCoeff[k] *
                 (A.partial(0, k + 1, z, x, xi, tau) * B.partial(k, 0, z, x, xi, tau) +
                  A.partial(0, k, z, x, xi, tau) * B.partial(k, 1, z, x, xi, tau));
        return acc;
      });
  return out;
}

SymbolFn sqrt_symbol(const SymbolFn& A, int terms, const ConeConfig& cone) {
  if (terms < 1 || terms > 2)
    throw ConfigError("sqrt_symbol: terms must be 1 or 2");

  auto a_val = [A](double z, double x, double xi, double tau) {
    const double a = A(z, x, xi, tau).real();
    if (a <= 0.0)
      throw DomainError("sqrt_symbol: symbol not positive (outside the cone)");
    return a;
  };
  // T0 = -sgn(tau) sqrt(A), with chain-rule partials from A.
  auto t0 = [A, a_val](double z, double x, double xi, double tau) {
    return cd(-sgn(tau) * std::sqrt(a_val(z, x, xi, tau)), 0.0);
  };
  auto t0_d1 = [A, a_val](int dx, int dxi, double z, double x, double xi,
                          double tau) {
    const double a = a_val(z, x, xi, tau);
    const cd da = A.partial(dx, dxi, z, x, xi, tau);
    return cd(-sgn(tau), 0.0) * da / (2.0 * std::sqrt(a));
  };
  auto t0_d2 = [A, a_val](int dx1, int dxi1, int dx2, int dxi2, double z,
                          double x, double xi, double tau) {
    // d2 T0 = -sgn(tau) [ d2A / (2 sqrt(A)) - dA dA' / (4 A^{3/2}) ]
    const double a = a_val(z, x, xi, tau);
    const cd d1 = A.partial(dx1, dxi1, z, x, xi, tau);
    const cd d2 = A.partial(dx2, dxi2, z, x, xi, tau);
    const cd d12 = A.partial(dx1 + dx2, dxi1 + dxi2, z, x, xi, tau);
    return cd(-sgn(tau), 0.0) *
           (d12 / (2.0 * std::sqrt(a)) - d1 * d2 / (4.0 * std::pow(a, 1.5)));
  };

  SymbolFn T0(1, t0);
  T0.with_partial(1, 0, [t0_d1](double z, double x, double xi, double tau) {
      return t0_d1(1, 0, z, x, xi, tau);
    })
      .with_partial(0, 1, [t0_d1](double z, double x, double xi, double tau) {
        return t0_d1(0, 1, z, x, xi, tau);
      })
      .with_partial(2, 0, [t0_d2](double z, double x, double xi, double tau) {
        return t0_d2(1, 0, 1, 0, z, x, xi, tau);
      })
      .with_partial(1, 1, [t0_d2](double z, double x, double xi, double tau) {
        return t0_d2(1, 0, 0, 1, z, x, xi, tau);
      })
      .with_partial(0, 2, [t0_d2](double z, double x, double xi, double tau) {
        return t0_d2(0, 1, 0, 1, z, x, xi, tau);
      })
      .with_valid_cone(cone);
  if (terms == 1) return T0;

  // One induction round: R0 = T0 # T0 - A at first order, T1 = -R0 / (2 T0).
  auto r0 = [A, T0](double z, double x, double xi, double tau) {
    const cd t = T0(z, x, xi, tau);
    return t * t + cd(0.0, -1.0) * T0.partial(0, 1, z, x, xi, tau) *
                       T0.partial(1, 0, z, x, xi, tau) -
           A(z, x, xi, tau);
  };
  auto r0_d = [A, T0](int dx, int dxi, double z, double x, double xi,
                      double tau) {
    // d[T0^2 - A] + (1/i) d[T0_xi T0_x], all factors analytic on T0.
    const cd t = T0(z, x, xi, tau);
    const cd dt = T0.partial(dx, dxi, z, x, xi, tau);
    const cd t_xi = T0.partial(0, 1, z, x, xi, tau);
    const cd t_x = T0.partial(1, 0, z, x, xi, tau);
    const cd dt_xi = T0.partial(dx, dxi + 1, z, x, xi, tau);
    const cd dt_x = T0.partial(dx + 1, dxi, z, x, xi, tau);
    return 2.0 * t * dt - A.partial(dx, dxi, z, x, xi, tau) +
           cd(0.0, -1.0) * (dt_xi * t_x + t_xi * dt_x);
  };

  auto eval = [T0, r0](double z, double x, double xi, double tau) {
    const cd t = T0(z, x, xi, tau);
    return t - 0.5 * r0(z, x, xi, tau) / t;
  };
  SymbolFn out(1, eval);
  auto first = [T0, r0, r0_d](int dx, int dxi, double z, double x, double xi,
                              double tau) {
    const cd t = T0(z, x, xi, tau);
    const cd dt = T0.partial(dx, dxi, z, x, xi, tau);
    const cd r = r0(z, x, xi, tau);
    const cd dr = r0_d(dx, dxi, z, x, xi, tau);
    return dt - 0.5 * (dr * t - r * dt) / (t * t);
  };
  out.with_partial(1, 0, [first](double z, double x, double xi, double tau) {
      return first(1, 0, z, x, xi, tau);
    })
      .with_partial(0, 1, [first](double z, double x, double xi, double tau) {
        return first(0, 1, z, x, xi, tau);
      })
      .with_valid_cone(cone);
  return out;
}

SymbolFn symbol_constant(cd value, int order) {
  auto zero = [](double, double, double, double) { return cd(0.0, 0.0); };
  SymbolFn s(order, [value](double, double, double, double) { return value; });
  s.with_partial(1, 0, zero)
      .with_partial(0, 1, zero)
      .with_partial(2, 0, zero)
      .with_partial(1, 1, zero)
      .with_partial(0, 2, zero)
      .with_z_partial(zero);
  return s;
}

SymbolFn symbol_a(const Medium& m) {
  SymbolFn s(2, [m](double z, double x, double xi, double tau) {
    const double nu = m.values(z, x).first;
    return cd(nu * nu * tau * tau - xi * xi, 0.0);
  });
  s.with_partial(1, 0,
                 [m](double z, double x, double, double tau) {
                   const auto e = m.eval(z, x);
                   return cd(2.0 * e.nu.v * e.nu.dx * tau * tau, 0.0);
                 })
      .with_partial(0, 1,
                    [](double, double, double xi, double) {
                      return cd(-2.0 * xi, 0.0);
                    })
      .with_partial(2, 0,
                    [m](double z, double x, double, double tau) {
                      const auto e = m.eval(z, x);
                      return cd(2.0 * (e.nu.dx * e.nu.dx + e.nu.v * e.nu.dxx) *
                                    tau * tau,
                                0.0);
                    })
      .with_partial(1, 1,
                    [](double, double, double, double) { return cd(0.0, 0.0); })
      .with_partial(0, 2,
                    [](double, double, double, double) { return cd(-2.0, 0.0); })
      .with_z_partial([m](double z, double x, double, double tau) {
        const auto e = m.eval(z, x);
        return cd(2.0 * e.nu.v * e.nu.dz * tau * tau, 0.0);
      })
      .with_x_scale(m.domain().x_extent());
  return s;
}

SymbolFn symbol_b(const Medium& m) {
  return sqrt_symbol(symbol_a(m), 1, ConeConfig{});
}

SymbolFn symbol_b_extended(const Medium& m, const ConeConfig& cone) {
  SymbolFn s(1, [m, cone](double z, double x, double xi, double tau) {
    return cd(eval_b_extended(m, {z, x, xi, tau}, cone), 0.0);
  });
  s.with_x_scale(m.domain().x_extent());
  return s;
}

SymbolFn symbol_oneway(const Medium& m, WaveSign sign, Normalization norm,
                       const ConeConfig& cone, SymbolTaper taper) {
  SymbolFn s(1, [m, sign, norm, cone, taper](double z, double x, double xi,
                                             double tau) {
    return eval_B(m, {z, x, xi, tau}, sign, norm, cone, taper);
  });
  s.with_x_scale(m.domain().x_extent());
  return s;
}

SymbolFn symbol_damping(const Medium& m, const DampingConfig& d) {
  SymbolFn s(1, [m, d](double z, double x, double xi, double tau) {
    return cd(eval_damping(m, {z, x, xi, tau}, d), 0.0);
  });
  s.with_x_scale(m.domain().x_extent());
  return s;
}

}  // namespace onewave
