#include "waves/hyperbolic.hpp"

#include <cmath>

namespace waves::hyp {

double coth(double z) { return 1.0 + 2.0 / std::expm1(2.0 * z); }

double z_coth_z(double z) {
  if (z == 0.0) return 1.0;
  // expm1 overflows to inf for large z and the second term vanishes.
  return z + 2.0 * z / std::expm1(2.0 * z);
}

double coth_minus_z_csch2(double z) {
  if (z < 0.05) {
    const double z2 = z * z;
    return z * (2.0 / 3.0 + z2 * (-4.0 / 45.0 + z2 * (4.0 / 315.0)));
  }
  if (z > 40.0) return coth(z);  // z/sinh^2 below 1e-33
  const double s = std::sinh(z);
  return coth(z) - z / (s * s);
}

double sinh_ratio(double k, double y, double d) {
  if (k == 0.0) return y / d;
  // e^{k(y-d)} (1 - e^{-2ky}) / (1 - e^{-2kd})
  return std::exp(k * (y - d)) * std::expm1(-2.0 * k * y) / std::expm1(-2.0 * k * d);
}

double sinh_ratio_dy(double k, double y, double d) {
  if (k == 0.0) return 1.0 / d;
  return -k * std::exp(k * (y - d)) * (1.0 + std::exp(-2.0 * k * y)) /
         std::expm1(-2.0 * k * d);
}

}  // namespace waves::hyp
