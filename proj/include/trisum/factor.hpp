#pragma once

#include <vector>

#include "trisum/multipoly.hpp"

namespace trisum {

struct Factor {
  MultiPoly poly;  // irreducible over Q, integer-primitive, positive leading coefficient
  int multiplicity;
};

/// p = content * prod(factor^multiplicity).
struct Factorization {
  Rational content;
  std::vector<Factor> factors;

  MultiPoly expand() const;
};

/// Irreducible factorization over the rationals. Requires p != 0.
Factorization factor(const MultiPoly& p);

/// Squarefree decomposition with respect to v of a polynomial primitive in v:
/// pairs (A_i, i) with p = unit * prod A_i^i, A_i squarefree and coprime.
std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p, int v);

namespace detail {
using ZPoly = std::vector<Integer>;
/// Factors a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> factor_squarefree_univariate(const ZPoly& f);
}  // namespace detail

}  // namespace trisum
