#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trisum/ratfunc.hpp"

namespace trisum {

/// Coefficient field of a bivariate problem in y, z: the rationals, or
/// rational functions in x with x treated as a parameter.
enum class Base { Q, QX };

/// a / d^j with d irreducible, deg_z(a) < deg_z(d), and a polynomial in z
/// over the base field extended by y.
struct SimpleFraction {
  RatFunc a;
  MultiPoly d;
  int j = 1;

  RatFunc value() const;
};

/// f = delta_y(g) + delta_z(h) + sum(residue). Residue denominators are
/// pairwise inequivalent under y, z shifts (per multiplicity) and each
/// residue fraction is not summable.
struct AdditiveDecomposition {
  RatFunc g, h;
  std::vector<SimpleFraction> residue;
};

/// Data behind a summable fraction a / d^j: a = sigma_y^t sigma_z^(-l)(p) - p.
struct SummabilityWitness {
  MultiPoly d;
  int j = 1;
  long t = 0, l = 0;
  RatFunc p;
};

struct SummabilityResult {
  bool summable = false;
  std::optional<std::pair<RatFunc, RatFunc>> certificate;  // (g, h)
  std::vector<SummabilityWitness> witnesses;
  std::vector<SimpleFraction> residue;
};

/// (g, h) with sigma_y^n sigma_z^k (w) - w = delta_y(g) + delta_z(h).
std::pair<RatFunc, RatFunc> shift_difference_certificate(const RatFunc& w, long n, long k);

/// Polynomial U in var with U(var + step) - U(var) = P, where P is a
/// polynomial in var whose coefficients may be rational in other variables.
RatFunc polynomial_antidifference(const RatFunc& p, int var, long step);

/// u with u(var + step) - u(var) = r, or nullopt when no rational u exists.
std::optional<RatFunc> solve_step_difference(const RatFunc& r, int var, long step);

/// p in F(y)[z], deg_z(p) < deg_z(d), with a = sigma_y^t sigma_z^(-l)(p) - p.
/// Throws std::invalid_argument unless sigma_y^t(d) = sigma_z^l(d), t > 0
/// and deg_z(a) < deg_z(d).
std::optional<RatFunc> solve_shift_difference(const RatFunc& a, const MultiPoly& d, long t, long l);

/// Throws std::invalid_argument for base Q when f depends on x. When
/// `den_factors` is given it replaces factorization of the denominator.
AdditiveDecomposition additive_decomposition(const RatFunc& f, Base base,
                                             const std::vector<MultiPoly>* den_factors = nullptr);

SummabilityResult is_summable(const RatFunc& f, Base base,
                              const std::vector<MultiPoly>* den_factors = nullptr);

/// Checks f = delta_y(g) + delta_z(h) exactly.
bool check_certificate(const RatFunc& f, const RatFunc& g, const RatFunc& h);

}  // namespace trisum
