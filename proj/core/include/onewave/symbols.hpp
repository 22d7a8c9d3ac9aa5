#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "onewave/medium.hpp"
#include "onewave/phase_space.hpp"

namespace onewave {

/// a(z,x,xi,tau) = nu^2 tau^2 - xi^2, the second-order lateral symbol.
double eval_a(const Medium& m, const PhasePoint& p);

/// a_rho = a / rho.
double eval_a_rho(const Medium& m, const PhasePoint& p);

/// Vertical wavenumber root b = -tau nu sqrt(1 - xi^2/(nu^2 tau^2)).
/// Defined for propagating points (|xi| < nu |tau|); sgn(b) = -sgn(tau), so
/// +b is the branch with dz/dt > 0 (downgoing).
double eval_b(const Medium& m, const PhasePoint& p);

/// Smooth 1-homogeneous extension of b: equals b on the closed cone
/// I'_theta2 and blends to the floor value -tau nu sqrt(y_floor) outside it,
/// removing the square-root singularity at grazing.
double eval_b_extended(const Medium& m, const PhasePoint& p,
                       const ConeConfig& cone);

/// The imaginary part s of the zeroth-order term of B_+, computed by the
/// generic route (1/2) b^{-1} (db/dxi) (db/dx). eval_B adds i*s to b.
double eval_zeroth_correction(const Medium& m, const PhasePoint& p);

/// Same quantity by the explicit closed form
/// (1/2) nu xi (dnu/dx) tau^{-1} (nu^2 - xi^2/tau^2)^{-3/2};
/// an independent route used to cross-check eval_zeroth_correction.
double eval_zeroth_correction_explicit(const Medium& m, const PhasePoint& p);

/// Whether eval_B applies the inner-cone taper to its zeroth-order terms
/// (1 on I'_theta1, 0 outside I'_theta2). Symbol-calculus comparisons use
/// the untapered version.
enum class SymbolTaper { On, Off };

/// Two-term one-way symbol B_{+-}. Unitary normalization returns
/// sign*(b_ext + i s); Sum normalization adds the shift
/// (i/4)(da/dz)/a - (i/2)(drho/dz)/rho. Zeroth-order parts are multiplied by
/// the inner-cone taper unless taper == Off.
std::complex<double> eval_B(const Medium& m, const PhasePoint& p, WaveSign sign,
                            Normalization norm, const ConeConfig& cone,
                            SymbolTaper taper = SymbolTaper::On);

/// Principal decomposition matrix Q at a propagating interior point.
Eigen::Matrix2cd eval_Q(const Medium& m, const PhasePoint& p,
                        Normalization norm);

/// Exact inverse of the principal unitary Q.
Eigen::Matrix2cd eval_Q0_inverse(const Medium& m, const PhasePoint& p);

/// Membership in the closed cone I'_theta: |xi / (nu tau)| <= sin(theta).
bool in_cone(const Medium& m, const PhasePoint& p, double theta);

/// Propagation-angle sine |xi / (nu tau)|; 0-homogeneous in (xi, tau).
double angle_sine(const Medium& m, const PhasePoint& p);

/// The smooth transition function: 0 for y <= 0, 1 for y >= 1,
/// exp(-1/y) / (exp(-1/y) + exp(-1/(1-y))) in between.
double eval_h(double y);

/// Inner-cone taper: 1 on I'_theta1, 0 outside I'_theta2, h-smooth between.
double cone_taper(const Medium& m, const PhasePoint& p, const ConeConfig& cone);

/// Damping symbol c = eta ||(xi,tau)|| h(|xi/(nu tau)| - sin theta1):
/// zero on I'_theta1, bounded below by a multiple of ||(xi,tau)|| outside
/// I'_theta2, 1-homogeneous.
double eval_damping(const Medium& m, const PhasePoint& p,
                    const DampingConfig& d);

/// Phase-space sample over which the damping derivative bounds are probed.
struct DampingSampleSpec {
  std::vector<double> z_values;
  std::vector<double> x_values;
  std::vector<double> angle_sines;  // target |xi/(nu tau)| values
  std::vector<double> taus;
  double step_scale = 1e-3;

  /// Covers the inner cone, the transition band, and beyond theta2.
  static DampingSampleSpec standard(const Medium& m, const ConeConfig& cone);
  /// Restricted strictly inside I'_theta1 (where c vanishes identically).
  static DampingSampleSpec inner_cone_only(const Medium& m,
                                           const ConeConfig& cone);
};

struct DampingBoundsReport {
  int l_check = 0;
  std::size_t points_checked = 0;
  std::size_t derivatives_checked = 0;
  double max_constant = 0.0;  // smallest C making the order-L bound hold
  std::vector<std::string> violations;  // non-convergent FD derivatives

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Finite-difference spot check of the derivative bounds for the damping
/// symbol: all mixed derivatives of total order < l_check are estimated at
/// two FD steps; an estimate that grows under step refinement flags a
/// violation (non-smooth symbol).
DampingBoundsReport check_damping_bounds(const Medium& m,
                                         const DampingConfig& d,
                                         const DampingSampleSpec& spec);

/// Same engine for an arbitrary real symbol (used to confirm the check
/// catches non-smooth cutoffs).
using RealSymbol = std::function<double(double z, double x, double xi, double tau)>;
DampingBoundsReport check_symbol_bounds(const RealSymbol& sym, int l_check,
                                        const Medium& m,
                                        const DampingSampleSpec& spec);

}  // namespace onewave
