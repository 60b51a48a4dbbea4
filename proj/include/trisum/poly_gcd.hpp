#pragma once

#include <vector>

#include "trisum/multipoly.hpp"

namespace trisum {

/// Greatest common divisor over the rationals, normalized (integer-primitive,
/// positive leading coefficient). gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly gcd(const std::vector<MultiPoly>& ps);
MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

/// Content with respect to v: normalized gcd of the coefficients in v.
MultiPoly content(const MultiPoly& p, int v);
/// p / content(p, v).
MultiPoly primitive_part(const MultiPoly& p, int v);

/// Content with respect to the variables in `mask`: the gcd of the
/// coefficients of p viewed as a polynomial in those variables.
MultiPoly content_in(const MultiPoly& p, unsigned mask);

}  // namespace trisum
