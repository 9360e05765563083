#pragma once

// Overflow-free hyperbolic kernels shared by the dispersion relation, the
// branch fields and the spectral oracle. Arguments are assumed non-negative.

namespace waves::hyp {

/// coth(z) for z > 0, written as 1 + 2/(e^{2z}-1).
double coth(double z);

/// z*coth(z), equal to 1 at z = 0.
double z_coth_z(double z);

/// coth(z) - z/sinh(z)^2. This is H(z) and also sigma'(tau)/kappa^2 at z = tau*d.
double coth_minus_z_csch2(double z);

/// sinh(k*y)/sinh(k*d); reduces to y/d for k = 0.
double sinh_ratio(double k, double y, double d);

/// cosh(k*y)/sinh(k*d) * k, i.e. the y-derivative of sinh_ratio; 1/d for k = 0.
double sinh_ratio_dy(double k, double y, double d);

}  // namespace waves::hyp
