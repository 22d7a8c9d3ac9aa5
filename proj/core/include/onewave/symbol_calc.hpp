#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onewave/medium.hpp"
#include "onewave/phase_space.hpp"
#include "onewave/symbols.hpp"

namespace onewave {

/// A phase-space symbol psi(z, x, xi, tau) with partial-derivative access.
///
/// Partials in x and xi are analytic where attached and centered finite
/// differences otherwise (step 1e-5 * (1 + |xi|) in xi, 1e-5 * scale in x).
/// Construction is cheap; SymbolFn values are immutable in use and safe to
/// share across threads.
class SymbolFn {
 public:
  using Eval =
      std::function<std::complex<double>(double z, double x, double xi, double tau)>;

  SymbolFn(int order, Eval f);

  SymbolFn& with_partial(int dx, int dxi, Eval f);
  SymbolFn& with_z_partial(Eval f);
  /// Forbid finite-difference fallback: partial() beyond the attached
  /// analytic set then throws CapabilityError.
  SymbolFn& without_fd_fallback();
  SymbolFn& with_x_scale(double s);
  SymbolFn& with_valid_cone(ConeConfig cone);

  std::complex<double> operator()(double z, double x, double xi, double tau) const;
  /// d^dx/dx^dx d^dxi/dxi^dxi of the symbol.
  std::complex<double> partial(int dx, int dxi, double z, double x, double xi,
                               double tau) const;
  std::complex<double> partial_z(double z, double x, double xi, double tau) const;

  int order() const { return order_; }
  const std::optional<ConeConfig>& valid_cone() const { return valid_cone_; }

 private:
  int order_;
  Eval eval_;
  std::map<std::pair<int, int>, Eval> partials_;
  std::optional<Eval> z_partial_;
  std::optional<ConeConfig> valid_cone_;
  bool allow_fd_ = true;
  double x_scale_ = 1.0;
};

/// Truncated Kohn-Nirenberg composition
///   (A # B)(z,x,xi,tau) = sum_{k <= max_order} 1/(k! i^k) dxi^k A dx^k B,
/// a symbol of order order(A) + order(B). max_order must be 0, 1 or 2.
SymbolFn compose(const SymbolFn& A, const SymbolFn& B, int max_order);

/// Asymptotic square root of an elliptic, positive-on-the-cone symbol A of
/// order 2: the leading term is b = -sgn(tau) sqrt(A) and each correction is
/// T_{k+1} = -(1/2) b^{-1} R_k with R_k the composition residual. terms is 1
/// (principal only) or 2 (principal + zeroth order).
SymbolFn sqrt_symbol(const SymbolFn& A, int terms, const ConeConfig& cone);

/// Symbol factories bound to a medium.
SymbolFn symbol_constant(std::complex<double> value, int order = 0);
SymbolFn symbol_a(const Medium& m);
SymbolFn symbol_b(const Medium& m);  // interior of the propagating cone only
SymbolFn symbol_b_extended(const Medium& m, const ConeConfig& cone);
SymbolFn symbol_oneway(const Medium& m, WaveSign sign, Normalization norm,
                       const ConeConfig& cone,
                       SymbolTaper taper = SymbolTaper::On);
SymbolFn symbol_damping(const Medium& m, const DampingConfig& d);

/// Least-squares slope of log(y) against log(x); the lambda-scaling order
/// estimate used by the asymptotic checks.
double fit_loglog_slope(const std::vector<double>& x,
                        const std::vector<double>& y);

/// Off-diagonal entry of the transformed first-order system,
/// (1/4)((da_rho/dz)/a_rho - (drho/dz)/rho), plus a finite-difference check
/// of the power rule d(a_rho^s)/dz a_rho^{-s} = s (da_rho/dz)/a_rho.
struct OffdiagonalReport {
  double offdiagonal = 0.0;
  double power_rule_error = 0.0;
  bool ok = false;
  std::string summary() const;
};
OffdiagonalReport verify_offdiagonal(const Medium& m, const PhasePoint& p);

/// The normalization shift (1/4)(da/dz)/a - (1/2)(drho/dz)/rho: checks that
/// -d(D^{-1})/dz D reproduces it (D = rho^{-1/2} a^{1/4}) and that
/// B_sum - B_unitary equals i times it.
struct NormalizationShiftReport {
  double shift = 0.0;
  double d_conjugation_error = 0.0;
  double eval_B_error = 0.0;
  bool ok = false;
  std::string summary() const;
};
NormalizationShiftReport verify_normalization_shift(const Medium& m,
                                                    const PhasePoint& p);

}  // namespace onewave
