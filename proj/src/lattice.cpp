#include "trisum/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace trisum {

namespace {

using Mat = std::vector<IVec>;

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy(IVec& row, const Integer& q, const IVec& src) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] -= q * src[j];
}

// Unimodular row reduction to echelon form. When u is given it receives the
// transform with u * original = result. Returns the pivot columns.
std::vector<std::size_t> echelon(Mat& m, std::size_t cols, Mat* u) {
  std::size_t rows = m.size();
  if (u) {
    u->assign(rows, IVec(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) (*u)[i][i] = 1;
  }
  std::vector<std::size_t> piv;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    bool found = false;
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pr; i < rows; ++i)
        if (m[i][c] != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == rows) break;
      found = true;
      std::swap(m[pr], m[best]);
      if (u) std::swap((*u)[pr], (*u)[best]);
      bool clean = true;
      for (std::size_t i = pr + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Integer q = fdiv(m[i][c], m[pr][c]);
        axpy(m[i], q, m[pr]);
        if (u) axpy((*u)[i], q, (*u)[pr]);
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (found) {
      piv.push_back(c);
      ++pr;
    }
  }
  return piv;
}

Mat transpose(const Mat& a, std::size_t cols) {
  Mat t(cols, IVec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

IVec to_ivec(const ShiftVector& s) { return {Integer(s.m), Integer(s.n), Integer(s.k)}; }

ShiftVector to_shift(const IVec& v) {
  ShiftVector s;
  for (int j = 0; j < 3; ++j) {
    if (!v[j].fits_slong_p()) throw std::overflow_error("shift component too large");
    s[j] = v[j].get_si();
  }
  return s;
}

std::vector<IVec> integer_kernel(const std::vector<IVec>& rows, std::size_t n) {
  Mat b = transpose(rows, n);
  Mat u;
  auto piv = echelon(b, rows.size(), &u);
  std::vector<IVec> ker(u.begin() + static_cast<long>(piv.size()), u.end());
  return hermite_form(std::move(ker), n);
}

std::vector<IVec> hermite_form(std::vector<IVec> rows, std::size_t n) {
  auto piv = echelon(rows, n, nullptr);
  rows.resize(piv.size());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (rows[i][piv[i]] < 0)
      for (auto& e : rows[i]) e = -e;
    for (std::size_t j = 0; j < i; ++j) axpy(rows[j], fdiv(rows[j][piv[i]], rows[i][piv[i]]), rows[i]);
  }
  return rows;
}

std::optional<IVec> solve_integer(const std::vector<IVec>& rows, const IVec& b, std::size_t n) {
  // V * A^T = H, so A * V^T = H^T and w = V^T y with H^T y = b.
  Mat h = transpose(rows, n);
  Mat v;
  auto piv = echelon(h, rows.size(), &v);
  IVec rest = b;
  IVec w(n, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const Integer& p = h[i][piv[i]];
    if (rest[piv[i]] % p != 0) return std::nullopt;
    Integer y = rest[piv[i]] / p;
    axpy(rest, y, h[i]);
    for (std::size_t j = 0; j < n; ++j) w[j] += y * v[i][j];
  }
  for (auto& e : rest)
    if (e != 0) return std::nullopt;
  return w;
}

Lattice::Lattice(const std::vector<IVec>& generators) {
  for (auto& r : hermite_form(generators, 3)) basis_.push_back(to_shift(r));
}

bool Lattice::contains(const ShiftVector& v) const {
  if (basis_.empty()) return v.is_zero();
  std::vector<IVec> a(3, IVec(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (int j = 0; j < 3; ++j) a[j][i] = basis_[i][j];
  return solve_integer(a, to_ivec(v), basis_.size()).has_value();
}

Lattice Lattice::restricted(unsigned axes) const {
  if (basis_.empty()) return *this;
  std::size_t r = basis_.size();
  std::vector<IVec> cons;
  for (int j = 0; j < 3; ++j) {
    if (axes >> j & 1) continue;
    IVec row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = basis_[i][j];
    cons.push_back(row);
  }
  if (cons.empty()) return *this;
  std::vector<IVec> gens;
  for (auto& c : integer_kernel(cons, r)) {
    IVec g(3, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (int j = 0; j < 3; ++j) g[j] += c[i] * basis_[i][j];
    gens.push_back(g);
  }
  return Lattice(gens);
}

ShiftVector Lattice::reduce(const ShiftVector& v) const {
  std::vector<ShiftVector> cands;
  std::function<void(ShiftVector, std::size_t)> rec = [&](ShiftVector cur, std::size_t bi) {
    if (bi == basis_.size()) {
      cands.push_back(cur);
      return;
    }
    const ShiftVector& b = basis_[bi];
    int p = 0;
    while (b[p] == 0) ++p;
    long q = cur[p] >= 0 ? cur[p] / b[p] : -((-cur[p] + b[p] - 1) / b[p]);
    long best = std::numeric_limits<long>::max();
    for (long c : {q, q + 1}) best = std::min(best, std::labs(cur[p] - c * b[p]));
    for (long c : {q, q + 1})
      if (std::labs(cur[p] - c * b[p]) == best) rec(cur - c * b, bi + 1);
  };
  rec(v, 0);
  auto key = [](const ShiftVector& s) {
    return std::array<long, 6>{std::labs(s.m), std::labs(s.n), std::labs(s.k), -s.m, -s.n, -s.k};
  };
  return *std::min_element(cands.begin(), cands.end(),
                           [&](const ShiftVector& a, const ShiftVector& b) { return key(a) < key(b); });
}

std::optional<ShiftVector> Lattice::min_positive(int coord) const {
  std::size_t r = basis_.size();
  IVec row(r);
  Integer g = 0;
  for (std::size_t i = 0; i < r; ++i) {
    row[i] = basis_[i][coord];
    g = gcd(g, row[i]);
  }
  if (g == 0) return std::nullopt;
  auto c = solve_integer({row}, IVec{g}, r);
  IVec u(3, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (int j = 0; j < 3; ++j) u[j] += (*c)[i] * basis_[i][j];
  std::vector<IVec> zero_gens;
  for (auto& k : integer_kernel({row}, r)) {
    IVec z(3, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (int j = 0; j < 3; ++j) z[j] += k[i] * basis_[i][j];
    zero_gens.push_back(z);
  }
  return Lattice(zero_gens).reduce(to_shift(u));
}

}  // namespace trisum
