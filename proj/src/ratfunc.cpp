#include "trisum/ratfunc.hpp"

#include <stdexcept>

#include "trisum/poly_gcd.hpp"

namespace trisum {

namespace {
MultiPoly quo(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_one()) return a;
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("RatFunc: inexact cancellation");
  return *q;
}
}  // namespace

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (den.is_constant()) {
    num_ = num / den.constant_value();
    den_ = MultiPoly(1);
    return;
  }
  MultiPoly g = gcd(num, den);
  num_ = quo(num, g);
  den_ = quo(den, g);
  normalize_unit();
}

void RatFunc::normalize_unit() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  Rational u = den_.normalization_unit();
  if (u != 1) {
    den_ /= u;
    num_ /= u;
  }
}

RatFunc RatFunc::shifted(const ShiftVector& s) const {
  if (s.is_zero()) return *this;
  // Shifts preserve coprimality and the grlex leading term.
  return RatFunc(num_.shifted(s), den_.shifted(s), Reduced{});
}

RatFunc RatFunc::shifted(const std::array<Rational, 3>& s) const {
  return RatFunc(num_.shifted(s), den_.shifted(s), Reduced{});
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by the zero polynomial");
  RatFunc r(den_, num_, Reduced{});
  r.normalize_unit();
  return r;
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)),
                 Reduced{});
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    MultiPoly n = num_ + o.num_;
    *this = RatFunc(n, den_);
    return *this;
  }
  if (den_.is_one()) {
    *this = RatFunc(num_ * o.den_ + o.num_, o.den_, Reduced{});
    normalize_unit();
    return *this;
  }
  if (o.den_.is_one()) {
    *this = RatFunc(num_ + o.num_ * den_, den_, Reduced{});
    return *this;
  }
  MultiPoly g = gcd(den_, o.den_);
  MultiPoly a = quo(den_, g), b = quo(o.den_, g);
  MultiPoly n = num_ * b + o.num_ * a;
  if (n.is_zero()) return *this = RatFunc();
  MultiPoly d = den_ * b;
  if (g.is_one()) {
    *this = RatFunc(std::move(n), std::move(d), Reduced{});
    normalize_unit();
  } else {
    MultiPoly h = gcd(n, g);
    *this = RatFunc(quo(n, h), quo(d, h), Reduced{});
    normalize_unit();
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  MultiPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  MultiPoly n = quo(num_, g1) * quo(o.num_, g2);
  MultiPoly d = quo(den_, g2) * quo(o.den_, g1);
  *this = RatFunc(std::move(n), std::move(d), Reduced{});
  normalize_unit();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  bool simple_num = num_.size() == 1 && sgn(num_.leading_coeff()) > 0;
  std::string out = simple_num ? n : "(" + n + ")";
  // The denominator is always parenthesized to bind tighter than '/'.
  return out + "/(" + den_.to_string() + ")";
}

RatFunc delta_y(const RatFunc& f) { return f.shifted(ShiftVector{0, 1, 0}) - f; }
RatFunc delta_z(const RatFunc& f) { return f.shifted(ShiftVector{0, 0, 1}) - f; }

}  // namespace trisum
