#pragma once

#include <string>

#include "trisum/multipoly.hpp"

namespace trisum {

/// Reduced fraction num/den in Q(x, y, z).
///
/// Invariants: den != 0, gcd(num, den) = 1, den integer-primitive with positive
/// grlex leading coefficient. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}     // NOLINT
  RatFunc(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  /// Throws std::domain_error when den is zero.
  RatFunc(const MultiPoly& num, const MultiPoly& den);

  static RatFunc var(int v) { return RatFunc(MultiPoly::var(v)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
  bool contains(int v) const { return num_.contains(v) || den_.contains(v); }
  unsigned var_mask() const { return num_.var_mask() | den_.var_mask(); }

  RatFunc shifted(const ShiftVector& s) const;
  RatFunc shifted(const std::array<Rational, 3>& s) const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    return a.den_ == b.den_ ? a.num_ < b.num_ : a.den_ < b.den_;
  }

  /// Text in the expression grammar; re-parses to the same value.
  std::string to_string() const;

 private:
  struct Reduced {};
  RatFunc(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_unit();

  MultiPoly num_;
  MultiPoly den_;
};

/// Forward differences in y and z.
RatFunc delta_y(const RatFunc& f);
RatFunc delta_z(const RatFunc& f);

}  // namespace trisum
