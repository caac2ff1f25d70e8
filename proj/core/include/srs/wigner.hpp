#pragma once

#include "srs/half_int.hpp"

namespace srs {

// Wigner 3j symbol (j1 j2 j3; m1 m2 m3), Racah formula, Condon-Shortley
// phases. Returns 0 when the triangle or projection rules fail.
double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt m1, HalfInt m2, HalfInt m3);

// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}. Returns 0 on triangle failure.
double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt j4, HalfInt j5, HalfInt j6);

// Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M>.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M);

} // namespace srs
