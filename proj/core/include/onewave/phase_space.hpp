#pragma once

#include <cmath>
#include <numbers>

namespace onewave {

class Medium;

/// A point of reduced phase space: position (z, x), lateral wavenumber xi,
/// temporal frequency tau. zeta and t ride along for ray work.
struct PhasePoint {
  double z = 0.0;
  double x = 0.0;
  double xi = 0.0;
  double tau = 1.0;
  double zeta = 0.0;
  double t = 0.0;
};

/// Branch of the one-way decomposition: Down is the + branch (dz/dt > 0).
enum class WaveSign { Down = +1, Up = -1 };

inline double sign_of(WaveSign s) { return s == WaveSign::Down ? 1.0 : -1.0; }

/// Normalization of the decomposition matrix Q: Unitary makes the one-way
/// generator selfadjoint; Sum makes U = u_+ + u_- (first row of Q is (1,1)).
enum class Normalization { Unitary, Sum };

/// Angular cones about the vertical. Inside theta1 the equation is exact and
/// the damping vanishes; outside theta2 the damping is elliptic and the
/// extended vertical-slowness symbol replaces the square root.
struct ConeConfig {
  double theta1 = 45.0 * std::numbers::pi / 180.0;
  double theta2 = 70.0 * std::numbers::pi / 180.0;
  /// Bound C in |zeta| < C |tau| for propagating singularities; must be at
  /// least nu_max of the medium.
  double c_zeta = 2.0;
  /// Floor for the extended symbol: outside the cone the square-root argument
  /// is replaced by this constant. Must satisfy y_floor < cos(theta2)^2.
  double y_floor = 0.01;

  void validate() const;

  /// Default cone for a medium: theta1 = 45 deg, theta2 = 70 deg,
  /// c_zeta = 2 nu_max.
  static ConeConfig for_medium(const Medium& m);
};

/// Weight w in the damping symbol c = w * h(...); order-1 homogeneous.
enum class DampingWeight { NormXiTau };  // w = eta * sqrt(xi^2 + tau^2)

struct DampingConfig {
  double eta = 1.0;
  DampingWeight w_kind = DampingWeight::NormXiTau;
  ConeConfig cone;
  int l_check = 4;  // derivative-bound check order, must be > 2

  void validate() const;
};

}  // namespace onewave
