#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trisum/ratfunc.hpp"

namespace trisum {

/// Recurrence operator sum_i c_i(x) S_x^i with S_x c(x) = c(x+1) S_x.
class OrePoly {
 public:
  OrePoly() = default;
  OrePoly(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  OrePoly(long c) : OrePoly(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  OrePoly(const Rational& c) : OrePoly(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  /// Coefficients must be free of y and z.
  explicit OrePoly(std::vector<RatFunc> coeffs);

  static OrePoly shift(unsigned power = 1);

  bool is_zero() const { return c_.empty(); }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  const RatFunc& coeff(int i) const;
  const RatFunc& lead() const { return c_.back(); }

  OrePoly monic() const;
  /// sum_i c_i * f(x+i, y, z).
  RatFunc apply(const RatFunc& f) const;
  /// Replaces S_x by S_x^step.
  OrePoly dilate(unsigned step) const;

  OrePoly operator-() const;
  OrePoly& operator+=(const OrePoly& o);
  OrePoly& operator-=(const OrePoly& o);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
  friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

  /// Text such as "(x + 1)*Sx^2 - Sx + 1/x"; re-parses with parse_ore.
  std::string to_string() const;

 private:
  void trim();
  std::vector<RatFunc> c_;
};

OrePoly ore_mul(const OrePoly& a, const OrePoly& b);

/// a = q * b + r with order(r) < order(b).
void right_divide(const OrePoly& a, const OrePoly& b, OrePoly* q, OrePoly* r);

/// Monic least common left multiple. Inputs must be nonzero.
OrePoly lclm(const OrePoly& a, const OrePoly& b);
OrePoly lclm(const std::vector<OrePoly>& ops);

/// L = L_0 + ... + L_{m-1}, the exponents of L_i all congruent to i mod m.
struct ExponentSeparation {
  int m = 1;
  std::vector<OrePoly> parts;
  OrePoly sum() const;
};
ExponentSeparation exponent_separation(const OrePoly& l, int m);

class OreMatrix {
 public:
  OreMatrix() = default;
  OreMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static OreMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  OrePoly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const OrePoly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend OreMatrix operator*(const OreMatrix& a, const OreMatrix& b);
  friend bool operator==(const OreMatrix& a, const OreMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<OrePoly> a_;
};

/// The m x m matrix with entry (i, j) = L_{(i - j) mod m} of the m-exponent
/// separation of L.
OreMatrix separation_matrix(const OrePoly& l, int m);

struct Diagonalization {
  OreMatrix transform;        // M
  std::vector<OrePoly> diag;  // M * separation_matrix(L, m) = diagonal(diag)
};
/// Requires L nonzero. Diagonal entries are monic and nonzero.
Diagonalization diagonalize_Lm(const OrePoly& l, int m);

/// Parses operator text in Sx with coefficients rational in x. Division is
/// allowed only by operators of order 0 and means right multiplication by
/// the inverse: "Sx/x" is Sx * (1/x) = 1/(x+1)*Sx.
OrePoly parse_ore(std::string_view text);
OrePoly divide_for_parse(const OrePoly& a, const OrePoly& b, std::size_t pos);

}  // namespace trisum
