#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "trisum/ratfunc.hpp"

namespace trisum::testing {

/// Seeded generator of small random polynomials and shifts.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Random polynomial in the variables of `mask` with total degree <= deg.
  MultiPoly poly(unsigned mask, unsigned deg, int nterms, long c = 5) {
    std::vector<MultiPoly::Term> ts;
    for (int i = 0; i < nterms; ++i) {
      std::array<unsigned, 3> e{0, 0, 0};
      unsigned left = static_cast<unsigned>(uniform(0, deg));
      for (int v = 0; v < 3; ++v) {
        if (!(mask >> v & 1)) continue;
        unsigned take = static_cast<unsigned>(uniform(0, left));
        e[v] = take;
        left -= take;
      }
      long k = uniform(-c, c);
      if (k != 0) ts.emplace_back(Monomial(e[0], e[1], e[2]), Rational(k));
    }
    return MultiPoly::from_terms(std::move(ts));
  }

  /// Nonconstant polynomial that depends on at least one variable of `need`.
  MultiPoly poly_with(unsigned mask, unsigned need, unsigned deg, int nterms, long c = 5) {
    for (;;) {
      MultiPoly p = poly(mask, deg, nterms, c);
      if (p.var_mask() & need) return p;
    }
  }

  ShiftVector shift(long r, unsigned mask = 7) {
    ShiftVector s;
    for (int v = 0; v < 3; ++v)
      if (mask >> v & 1) s[v] = uniform(-r, r);
    return s;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline unsigned bit(int v) { return 1u << v; }

}  // namespace trisum::testing

namespace trisum {
inline void PrintTo(const RatFunc& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const ShiftVector& s, std::ostream* os) { *os << to_string(s); }
}  // namespace trisum
