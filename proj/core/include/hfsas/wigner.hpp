#pragma once

#include "hfsas/half_int.hpp"

namespace hfsas {

/// Wigner 3-j symbol (j1 j2 j3; m1 m2 m3) from the Racah closed-form sum.
/// Returns 0 when the triangle rule or m1+m2+m3 = 0 is violated.
/// Exact to ~1e-12 absolute for arguments up to j = 5.
double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt m1, HalfInt m2, HalfInt m3);

/// Convenience overload; throws ConfigError if any argument is not a
/// half-integer.
double wigner_3j(double j1, double j2, double j3,
                 double m1, double m2, double m3);

} // namespace hfsas
