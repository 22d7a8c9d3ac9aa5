#include "onewave/phase_space.hpp"

#include "onewave/errors.hpp"
#include "onewave/medium.hpp"

namespace onewave {

void ConeConfig::validate() const {
  if (!(theta1 > 0.0) || !(theta2 > theta1) || !(theta2 < std::numbers::pi / 2))
    throw ConfigError("cone: need 0 < theta1 < theta2 < pi/2");
  if (!(c_zeta > 0.0)) throw ConfigError("cone: c_zeta must be positive");
  const double c2 = std::cos(theta2) * std::cos(theta2);
  if (!(y_floor > 0.0) || !(y_floor < c2))
    throw ConfigError("cone: need 0 < y_floor < cos(theta2)^2");
}

ConeConfig ConeConfig::for_medium(const Medium& m) {
  ConeConfig c;
  c.c_zeta = 2.0 * m.nu_max();
  c.validate();
  return c;
}

void DampingConfig::validate() const {
  if (!(eta > 0.0)) throw ConfigError("damping: eta must be positive");
  if (l_check <= 2) throw ConfigError("damping: l_check must exceed 2");
  cone.validate();
}

}  // namespace onewave
