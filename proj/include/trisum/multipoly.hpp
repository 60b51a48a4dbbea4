#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace trisum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Variable indices. The ordering x > y > z is the graded-lexicographic order
/// used for every canonical form in the library.
enum Var : int { X = 0, Y = 1, Z = 2 };
inline constexpr int kNumVars = 3;

const char* var_name(int v);

/// Exponent triple packed into one word so that integer comparison of the
/// packed value is graded-lexicographic comparison (x > y > z).
class Monomial {
 public:
  constexpr Monomial() = default;
  Monomial(unsigned ex, unsigned ey, unsigned ez)
      : key_(pack(ex, ey, ez)) {}

  static Monomial var(int v, unsigned e = 1) {
    std::array<unsigned, 3> a{0, 0, 0};
    a[v] = e;
    return Monomial(a[0], a[1], a[2]);
  }

  unsigned exp(int v) const {
    return static_cast<unsigned>((key_ >> (16 * (2 - v))) & 0xffffu);
  }
  unsigned total() const { return static_cast<unsigned>(key_ >> 48); }
  std::uint64_t key() const { return key_; }

  Monomial operator*(Monomial o) const {
    Monomial r;
    r.key_ = key_ + o.key_;
    return r;
  }
  bool divides(Monomial o) const {
    return exp(0) <= o.exp(0) && exp(1) <= o.exp(1) && exp(2) <= o.exp(2);
  }
  /// Requires divides(o).
  Monomial quotient_of(Monomial o) const {
    Monomial r;
    r.key_ = o.key_ - key_;
    return r;
  }
  Monomial without(int v) const {
    std::array<unsigned, 3> a{exp(0), exp(1), exp(2)};
    a[v] = 0;
    return Monomial(a[0], a[1], a[2]);
  }

  friend bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.key_ != b.key_; }
  friend bool operator<(Monomial a, Monomial b) { return a.key_ < b.key_; }
  friend bool operator>(Monomial a, Monomial b) { return a.key_ > b.key_; }

 private:
  static std::uint64_t pack(unsigned ex, unsigned ey, unsigned ez) {
    std::uint64_t t = std::uint64_t(ex) + ey + ez;
    return (t << 48) | (std::uint64_t(ex) << 32) | (std::uint64_t(ey) << 16) |
           std::uint64_t(ez);
  }
  std::uint64_t key_ = 0;
};

/// Integer shift vector (steps in x, y, z).
struct ShiftVector {
  long m = 0, n = 0, k = 0;

  long operator[](int v) const { return v == 0 ? m : (v == 1 ? n : k); }
  long& operator[](int v) { return v == 0 ? m : (v == 1 ? n : k); }
  bool is_zero() const { return m == 0 && n == 0 && k == 0; }

  friend ShiftVector operator+(ShiftVector a, ShiftVector b) {
    return {a.m + b.m, a.n + b.n, a.k + b.k};
  }
  friend ShiftVector operator-(ShiftVector a, ShiftVector b) {
    return {a.m - b.m, a.n - b.n, a.k - b.k};
  }
  friend ShiftVector operator-(ShiftVector a) { return {-a.m, -a.n, -a.k}; }
  friend ShiftVector operator*(long s, ShiftVector a) {
    return {s * a.m, s * a.n, s * a.k};
  }
  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

std::string to_string(const ShiftVector& s);

/// Sparse polynomial in x, y, z over the rationals.
///
/// Terms are kept sorted by decreasing graded-lexicographic monomial with no
/// zero coefficients, so structural equality is mathematical equality.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(long c);                 // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);      // NOLINT(google-explicit-constructor)
  MultiPoly(Monomial m, const Rational& c);

  static MultiPoly var(int v) { return MultiPoly(Monomial::var(v), 1); }
  /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
  static MultiPoly from_terms(std::vector<Term> terms);
  /// Assembles sum_i coeffs[i] * v^i; coefficients must not contain v.
  static MultiPoly from_coeffs(int v, const std::vector<MultiPoly>& coeffs);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0);
  }
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  Rational constant_term() const;
  bool is_one() const;

  Monomial leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coeff() const { return terms_.front().second; }

  int degree(int v) const;
  int total_degree() const;
  bool contains(int v) const;
  /// Bit mask of variables occurring in the polynomial.
  unsigned var_mask() const;

  /// Coefficients with respect to v: result[i] is the coefficient of v^i.
  std::vector<MultiPoly> coeffs(int v) const;
  MultiPoly coeff(int v, int e) const;
  /// Leading coefficient with respect to v.
  MultiPoly lead_coeff(int v) const;

  MultiPoly derivative(int v) const;
  MultiPoly evaluate(int v, const Rational& value) const;
  /// Substitutes x <- x+s[0], y <- y+s[1], z <- z+s[2].
  MultiPoly shifted(const std::array<Rational, 3>& s) const;
  MultiPoly shifted(const ShiftVector& s) const;
  /// Part made of the terms whose degree in the variables of `mask` equals e.
  MultiPoly homogeneous_part(unsigned mask, unsigned e) const;
  /// Drops terms whose degree in the variables of `mask` is >= bound.
  MultiPoly truncated(unsigned mask, unsigned bound) const;
  unsigned degree_in(unsigned mask) const;

  /// Rational c with p / c integer, coprime, and positive leading coefficient.
  Rational normalization_unit() const;
  MultiPoly normalized() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator/=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  /// Total order on canonical forms (term by term); used for deterministic choices.
  friend bool operator<(const MultiPoly& a, const MultiPoly& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Multiplies by a monomial.
MultiPoly mul_monomial(const MultiPoly& p, Monomial m);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b with respect to v.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int v);

/// Binomial coefficient as an exact integer.
Integer binomial(unsigned n, unsigned k);

}  // namespace trisum

template <>
struct std::hash<trisum::MultiPoly> {
  std::size_t operator()(const trisum::MultiPoly& p) const { return p.hash(); }
};
