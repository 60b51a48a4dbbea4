#pragma once

#include <optional>
#include <vector>

#include "trisum/ratfunc.hpp"

namespace trisum {

/// One term a / d^j. The numerator a is a polynomial in the main variable
/// whose coefficients may be rational in the remaining variables.
struct FractionTerm {
  RatFunc a;
  MultiPoly d;
  int j = 1;

  RatFunc value() const { return a / RatFunc(d.pow(static_cast<unsigned>(j))); }
};

struct PartialFractions {
  int var = Z;
  RatFunc poly_part;  // polynomial in var over the remaining variables
  std::vector<FractionTerm> terms;

  RatFunc value() const;
};

/// Decomposes f with respect to var. Denominator factors free of var are
/// treated as coefficients. When `factors` is given it lists pairwise coprime
/// polynomials whose powers make up the var-dependent part of the denominator;
/// otherwise the denominator is factored into irreducibles.
PartialFractions partial_fractions(const RatFunc& f, int var,
                                   const std::vector<MultiPoly>* factors = nullptr);

/// Primitive integer direction (a, b, c) with p = h(a*x + b*y + c*z) for a
/// univariate h, first nonzero entry positive. Requires p nonconstant.
std::optional<ShiftVector> integer_linear_test(const MultiPoly& p);

/// True when every irreducible denominator factor of f is integer-linear.
bool is_proper(const RatFunc& f);

}  // namespace trisum
