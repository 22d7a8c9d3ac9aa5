#include <array>
#include <cmath>
#include <sstream>

#include "onewave/errors.hpp"
#include "onewave/symbol_calc.hpp"
#include "onewave/symbols.hpp"

namespace onewave {

double fit_loglog_slope(const std::vector<double>& x,
                        const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ConfigError("fit_loglog_slope: need matching inputs, >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(std::max(y[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

/// Nested centered difference of f with the mixed order ord over
/// (z, x, xi, tau), one variable at a time.
double nested_fd(const RealSymbol& f, std::array<double, 4> pt,
                 std::array<int, 4> ord, const std::array<double, 4>& steps) {
  int v = -1;
  for (int k = 0; k < 4; ++k)
    if (ord[k] > 0) {
      v = k;
      break;
    }
  if (v < 0) return f(pt[0], pt[1], pt[2], pt[3]);
  auto lower = ord;
  lower[v] -= 1;
  auto plus = pt, minus = pt;
  plus[v] += steps[v];
  minus[v] -= steps[v];
  return (nested_fd(f, plus, lower, steps) - nested_fd(f, minus, lower, steps)) /
         (2.0 * steps[v]);
}

}  // namespace

std::string DampingBoundsReport::summary() const {
  std::ostringstream os;
  os << "damping-bounds: L=" << l_check << " points=" << points_checked
     << " derivatives=" << derivatives_checked << " max-constant="
     << max_constant << " violations=" << violations.size();
  return os.str();
}

DampingSampleSpec DampingSampleSpec::standard(const Medium& m,
                                              const ConeConfig& cone) {
  DampingSampleSpec s;
  const DomainRect& d = m.domain();
  for (double f : {0.2, 0.5, 0.8}) {
    s.z_values.push_back(d.z_lo + f * d.z_extent());
    s.x_values.push_back(d.x_lo + f * d.x_extent());
  }
  const double s1 = std::sin(cone.theta1);
  const double s2 = std::sin(cone.theta2);
  s.angle_sines = {0.2,       s1 - 0.05, s1 - 1e-4, s1 + 1e-4,
                   0.5 * (s1 + s2), s2 - 0.02, s2 + 0.05, 1.1};
  s.taus = {1.0, 4.0, 16.0, -2.0};
  return s;
}

DampingSampleSpec DampingSampleSpec::inner_cone_only(const Medium& m,
                                                     const ConeConfig& cone) {
  DampingSampleSpec s;
  const DomainRect& d = m.domain();
  for (double f : {0.3, 0.5, 0.7}) {
    s.z_values.push_back(d.z_lo + f * d.z_extent());
    s.x_values.push_back(d.x_lo + f * d.x_extent());
  }
  const double s1 = std::sin(cone.theta1);
  s.angle_sines = {0.0, 0.3 * s1, 0.6 * s1, s1 - 0.05};
  s.taus = {1.0, 4.0, -2.0};
  return s;
}

DampingBoundsReport check_symbol_bounds(const RealSymbol& sym, int l_check,
                                        const Medium& m,
                                        const DampingSampleSpec& spec) {
  if (l_check <= 2) throw ConfigError("check_symbol_bounds: l_check must exceed 2");
  DampingBoundsReport rep;
  rep.l_check = l_check;

  for (double z : spec.z_values)
    for (double x : spec.x_values)
      for (double target_s : spec.angle_sines)
        for (double tau : spec.taus) {
          const double nu = m.values(z, x).first;
          const double xi = target_s * nu * tau;
          ++rep.points_checked;
          const double cval = std::max(sym(z, x, xi, tau), 0.0);
          const double freq_norm = std::hypot(xi, tau);

          const std::array<double, 4> pt{z, x, xi, tau};
          const std::array<double, 4> base_steps{
              spec.step_scale * m.domain().z_extent() * 0.01,
              spec.step_scale * m.domain().x_extent() * 0.01,
              spec.step_scale * (1.0 + std::abs(xi)),
              spec.step_scale * (1.0 + std::abs(tau))};

          // All mixed derivatives of total order 1 .. l_check-1.
          for (int j = 0; j + 0 < l_check; ++j)
            for (int ax = 0; j + ax < l_check; ++ax)
              for (int bxi = 0; j + ax + bxi < l_check; ++bxi)
                for (int btau = 0; j + ax + bxi + btau < l_check; ++btau) {
                  const int total = j + ax + bxi + btau;
                  if (total == 0) continue;
                  const std::array<int, 4> ord{j, ax, bxi, btau};
                  auto halved = base_steps;
                  for (double& h : halved) h *= 0.5;
                  const double coarse = nested_fd(sym, pt, ord, base_steps);
                  const double fine = nested_fd(sym, pt, ord, halved);
                  ++rep.derivatives_checked;

                  const double scale =
                      std::pow(1.0 + freq_norm,
                               -(bxi + btau) + static_cast<double>(total) / l_check) *
                      std::pow(1.0 + cval,
                               1.0 - static_cast<double>(total) / l_check);
                  const double atol = 1e-7 * std::max(1.0, freq_norm);
                  if (std::abs(fine) > 1.7 * std::abs(coarse) + atol) {
                    std::ostringstream os;
                    os << "non-convergent derivative d^(" << j << "," << ax << ","
                       << bxi << "," << btau << ") at (z=" << z << ",x=" << x
                       << ",xi=" << xi << ",tau=" << tau << "): |D(h)|="
                       << std::abs(coarse) << " |D(h/2)|=" << std::abs(fine);
                    rep.violations.push_back(os.str());
                  } else {
                    rep.max_constant =
                        std::max(rep.max_constant, std::abs(fine) / scale);
                  }
                }
        }
  return rep;
}

DampingBoundsReport check_damping_bounds(const Medium& m,
                                         const DampingConfig& d,
                                         const DampingSampleSpec& spec) {
  d.validate();
  RealSymbol sym = [&m, &d](double z, double x, double xi, double tau) {
    return eval_damping(m, {z, x, xi, tau}, d);
  };
  return check_symbol_bounds(sym, d.l_check, m, spec);
}

std::string OffdiagonalReport::summary() const {
  std::ostringstream os;
  os << "offdiagonal=" << offdiagonal << " power-rule-error=" << power_rule_error
     << (ok ? " ok" : " FAIL");
  return os.str();
}

OffdiagonalReport verify_offdiagonal(const Medium& m, const PhasePoint& p) {
  const MediumEval e = m.eval(p.z, p.x);
  const double a = e.nu.v * e.nu.v * p.tau * p.tau - p.xi * p.xi;
  if (a <= 0.0) throw DomainError("verify_offdiagonal: evanescent point");
  const double a_z = 2.0 * e.nu.v * e.nu.dz * p.tau * p.tau;
  const double rho = e.rho.v, rho_z = e.rho.dz;
  // a_rho = a / rho; (da_rho/dz)/a_rho = a_z/a - rho_z/rho.
  const double ratio = a_z / a - rho_z / rho;

  OffdiagonalReport rep;
  rep.offdiagonal = 0.25 * (ratio - rho_z / rho);

  // FD check of d(a_rho^s)/dz a_rho^{-s} = s (da_rho/dz)/a_rho.
  auto a_rho_at = [&](double z) {
    const auto [nu, r] = m.values(z, p.x);
    return (nu * nu * p.tau * p.tau - p.xi * p.xi) / r;
  };
  const double h = 1e-6 * m.domain().z_extent();
  double max_err = 0.0;
  for (double s : {0.25, 0.5}) {
    const double fd = (std::pow(a_rho_at(p.z + h), s) -
                       std::pow(a_rho_at(p.z - h), s)) /
                      (2.0 * h);
    const double lhs = fd / std::pow(a_rho_at(p.z), s);
    max_err = std::max(max_err, std::abs(lhs - s * ratio));
  }
  rep.power_rule_error = max_err;
  rep.ok = max_err < 1e-5 * std::max(1.0, std::abs(ratio));
  return rep;
}

std::string NormalizationShiftReport::summary() const {
  std::ostringstream os;
  os << "shift=" << shift << " d-conjugation-error=" << d_conjugation_error
     << " eval_B-error=" << eval_B_error << (ok ? " ok" : " FAIL");
  return os.str();
}

NormalizationShiftReport verify_normalization_shift(const Medium& m,
                                                    const PhasePoint& p) {
  const MediumEval e = m.eval(p.z, p.x);
  const double a = e.nu.v * e.nu.v * p.tau * p.tau - p.xi * p.xi;
  if (a <= 0.0)
    throw DomainError("verify_normalization_shift: evanescent point");
  const double a_z = 2.0 * e.nu.v * e.nu.dz * p.tau * p.tau;

  NormalizationShiftReport rep;
  rep.shift = 0.25 * a_z / a - 0.5 * e.rho.dz / e.rho.v;

  // -d(D^{-1})/dz D = d/dz log(D) for the scalar principal symbol
  // D = rho^{-1/2} a^{1/4}, checked by finite differences.
  auto d_at = [&](double z) {
    const auto [nu, r] = m.values(z, p.x);
    const double av = nu * nu * p.tau * p.tau - p.xi * p.xi;
    return std::pow(av, 0.25) / std::sqrt(r);
  };
  const double h = 1e-6 * m.domain().z_extent();
  const double dinv_dz = (1.0 / d_at(p.z + h) - 1.0 / d_at(p.z - h)) / (2.0 * h);
  const double fd_shift = -dinv_dz * d_at(p.z);
  rep.d_conjugation_error = std::abs(fd_shift - rep.shift);

  const ConeConfig cone;
  const std::complex<double> delta =
      eval_B(m, p, WaveSign::Down, Normalization::Sum, cone, SymbolTaper::Off) -
      eval_B(m, p, WaveSign::Down, Normalization::Unitary, cone,
             SymbolTaper::Off);
  rep.eval_B_error = std::abs(delta - std::complex<double>(0.0, rep.shift));

  rep.ok = rep.d_conjugation_error < 1e-5 * std::max(1.0, std::abs(rep.shift)) &&
           rep.eval_B_error < 1e-12 * std::max(1.0, std::abs(rep.shift));
  return rep;
}

}  // namespace onewave
