#include "onewave/symbols.hpp"

#include <cmath>
#include <sstream>

#include "onewave/errors.hpp"

namespace onewave {
namespace {

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

void require_tau(const PhasePoint& p) {
  if (p.tau == 0.0) throw DomainError("symbol: tau must be nonzero");
}

/// Square-root-argument coordinate: y = 1 - xi^2 / (nu^2 tau^2). The cone
/// I'_theta is y >= cos(theta)^2.
double y_of(const Medium& m, const PhasePoint& p) {
  const double nu = m.values(p.z, p.x).first;
  const double s = p.xi / (nu * p.tau);
  return 1.0 - s * s;
}

}  // namespace

double eval_a(const Medium& m, const PhasePoint& p) {
  const double nu = m.values(p.z, p.x).first;
  return nu * nu * p.tau * p.tau - p.xi * p.xi;
}

double eval_a_rho(const Medium& m, const PhasePoint& p) {
  const auto [nu, rho] = m.values(p.z, p.x);
  return (nu * nu * p.tau * p.tau - p.xi * p.xi) / rho;
}

double eval_b(const Medium& m, const PhasePoint& p) {
  require_tau(p);
  const double a = eval_a(m, p);
  if (a <= 0.0)
    throw DomainError("eval_b: evanescent point (|xi| >= nu |tau|)");
  return -sgn(p.tau) * std::sqrt(a);
}

double eval_h(double y) {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  // h = e^{-1/y} / (e^{-1/y} + e^{-1/(1-y)}) in overflow-safe form.
  return 1.0 / (1.0 + std::exp(1.0 / y - 1.0 / (1.0 - y)));
}

double angle_sine(const Medium& m, const PhasePoint& p) {
  require_tau(p);
  const double nu = m.values(p.z, p.x).first;
  return std::abs(p.xi / (nu * p.tau));
}

bool in_cone(const Medium& m, const PhasePoint& p, double theta) {
  return angle_sine(m, p) <= std::sin(theta);
}

double eval_b_extended(const Medium& m, const PhasePoint& p,
                       const ConeConfig& cone) {
  require_tau(p);
  const double nu = m.values(p.z, p.x).first;
  const double s = p.xi / (nu * p.tau);
  const double y = 1.0 - s * s;
  const double y2 = std::cos(cone.theta2) * std::cos(cone.theta2);
  double g;
  if (y >= y2) {
    g = std::sqrt(y);
  } else {
    const double r = (y2 - y) / (y2 - cone.y_floor);
    if (r >= 1.0) {
      g = std::sqrt(cone.y_floor);
    } else {
      const double w = eval_h(r);  // y > y_floor here, sqrt(y) is fine
      g = (1.0 - w) * std::sqrt(y) + w * std::sqrt(cone.y_floor);
    }
  }
  return -p.tau * nu * g;
}

double eval_zeroth_correction(const Medium& m, const PhasePoint& p) {
  require_tau(p);
  const MediumEval me = m.eval(p.z, p.x);
  const double nu = me.nu.v;
  const double a = nu * nu * p.tau * p.tau - p.xi * p.xi;
  if (a <= 0.0)
    throw DomainError("eval_zeroth_correction: evanescent point");
  const double sq = std::sqrt(a);
  const double sg = sgn(p.tau);
  const double b = -sg * sq;
  const double b_xi = sg * p.xi / sq;
  const double b_x = -sg * nu * me.nu.dx * p.tau * p.tau / sq;
  return 0.5 * b_xi * b_x / b;
}

double eval_zeroth_correction_explicit(const Medium& m, const PhasePoint& p) {
  require_tau(p);
  const MediumEval me = m.eval(p.z, p.x);
  const double nu = me.nu.v;
  const double w = nu * nu - p.xi * p.xi / (p.tau * p.tau);
  if (w <= 0.0)
    throw DomainError("eval_zeroth_correction_explicit: evanescent point");
  return 0.5 * nu * p.xi * me.nu.dx / (p.tau * std::pow(w, 1.5));
}

double cone_taper(const Medium& m, const PhasePoint& p,
                  const ConeConfig& cone) {
  const double s = angle_sine(m, p);
  const double s1 = std::sin(cone.theta1);
  const double s2 = std::sin(cone.theta2);
  return 1.0 - eval_h((s - s1) / (s2 - s1));
}

std::complex<double> eval_B(const Medium& m, const PhasePoint& p,
                            WaveSign sign, Normalization norm,
                            const ConeConfig& cone, SymbolTaper taper) {
  require_tau(p);
  const double b_ext = eval_b_extended(m, p, cone);
  const double t = taper == SymbolTaper::On ? cone_taper(m, p, cone) : 1.0;
  double corr = 0.0;
  double shift = 0.0;
  if (t > 0.0) {  // t > 0 implies a > 0, the interior formulas apply
    corr = eval_zeroth_correction(m, p);
    if (norm == Normalization::Sum) {
      const MediumEval me = m.eval(p.z, p.x);
      const double a = me.nu.v * me.nu.v * p.tau * p.tau - p.xi * p.xi;
      const double a_z = 2.0 * me.nu.v * me.nu.dz * p.tau * p.tau;
      shift = 0.25 * a_z / a - 0.5 * me.rho.dz / me.rho.v;
    }
  }
  const double sg = sign_of(sign);
  return {sg * b_ext, sg * t * corr + t * shift};
}

Eigen::Matrix2cd eval_Q(const Medium& m, const PhasePoint& p,
                        Normalization norm) {
  require_tau(p);
  const auto [nu, rho] = m.values(p.z, p.x);
  const double a = nu * nu * p.tau * p.tau - p.xi * p.xi;
  if (a <= 0.0) throw DomainError("eval_Q: point not strictly propagating");
  const double sg = sgn(p.tau);
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd q;
  if (norm == Normalization::Unitary) {
    const double top = std::sqrt(rho) * std::pow(a, -0.25);
    const double bot = std::pow(a, 0.25) / std::sqrt(rho);
    q << top, top, i * sg * bot, -i * sg * bot;
  } else {
    const double bot = std::sqrt(a / rho) / rho;  // rho^{-1/2} a_rho^{1/2}
    q << 1.0, 1.0, -i * sg * bot, i * sg * bot;
  }
  return q;
}

Eigen::Matrix2cd eval_Q0_inverse(const Medium& m, const PhasePoint& p) {
  require_tau(p);
  const auto [nu, rho] = m.values(p.z, p.x);
  const double a = nu * nu * p.tau * p.tau - p.xi * p.xi;
  if (a <= 0.0)
    throw DomainError("eval_Q0_inverse: point not strictly propagating");
  const double a_rho = a / rho;
  const double sg = sgn(p.tau);
  const std::complex<double> i(0.0, 1.0);
  const double top = std::pow(rho, -0.25) * std::pow(a_rho, 0.25);
  const double off = std::pow(rho, 0.25) * std::pow(a_rho, -0.25);
  Eigen::Matrix2cd q;
  q << 0.5 * top, -0.5 * i * sg * off, 0.5 * top, 0.5 * i * sg * off;
  return q;
}

double eval_damping(const Medium& m, const PhasePoint& p,
                    const DampingConfig& d) {
  require_tau(p);
  const double s = angle_sine(m, p);
  const double hval = eval_h(s - std::sin(d.cone.theta1));
  if (hval == 0.0) return 0.0;
  const double w = d.eta * std::hypot(p.xi, p.tau);
  return w * hval;
}

}  // namespace onewave
