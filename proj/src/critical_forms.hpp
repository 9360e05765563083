#pragma once

#include <cmath>

#include "waves/laminar_flow.hpp"

namespace waves::detail {

// Factors of the near-critical expansions. With a^2 d_c^4 = 4 (1 - d_c^3) and
// u = sqrt(1 - d_c^3), a d_c^2 = 2 sgn(a) u, so for large a > 0 both factors
// below are tiny differences of O(1) numbers; these forms avoid the cancellation.
struct CriticalForms {
  double dc;
  double w;  // 2 - a d_c^2
  double v;  // 2 - d_c^3 - a d_c^2
};

inline CriticalForms critical_forms(double a) {
  const double dc = critical_depth(a);
  const double dc3 = dc * dc * dc;
  const double u = std::sqrt(1.0 - dc3);
  if (a > 0.0) {
    const double w = 2.0 * dc3 / (1.0 + u);
    return {dc, w, 0.25 * w * w};
  }
  return {dc, 2.0 * (1.0 + u), (1.0 + u) * (1.0 + u)};
}

}  // namespace waves::detail
