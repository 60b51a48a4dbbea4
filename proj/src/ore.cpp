#include "trisum/ore.hpp"

#include <stdexcept>

#include "trisum/parse.hpp"

namespace trisum {

namespace {

RatFunc sigma_x(const RatFunc& c, long i) { return i == 0 ? c : c.shifted(ShiftVector{i, 0, 0}); }

}  // namespace

OrePoly::OrePoly(const RatFunc& c) {
  if (c.contains(Y) || c.contains(Z)) throw std::invalid_argument("OrePoly: coefficient depends on y or z");
  if (!c.is_zero()) c_.push_back(c);
}

OrePoly::OrePoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_)
    if (c.contains(Y) || c.contains(Z)) throw std::invalid_argument("OrePoly: coefficient depends on y or z");
  trim();
}

OrePoly OrePoly::shift(unsigned power) {
  OrePoly r;
  r.c_.assign(power + 1, RatFunc());
  r.c_.back() = RatFunc(1);
  return r;
}

const RatFunc& OrePoly::coeff(int i) const {
  static const RatFunc zero;
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero;
}

void OrePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OrePoly OrePoly::monic() const {
  if (is_zero()) return *this;
  OrePoly r = *this;
  RatFunc inv = lead().inverse();
  for (auto& c : r.c_) c *= inv;
  return r;
}

RatFunc OrePoly::apply(const RatFunc& f) const {
  RatFunc out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) out += c_[i] * sigma_x(f, static_cast<long>(i));
  return out;
}

OrePoly OrePoly::dilate(unsigned step) const {
  if (is_zero()) return *this;
  OrePoly r;
  r.c_.assign((c_.size() - 1) * step + 1, RatFunc());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * step] = c_[i];
  return r;
}

OrePoly OrePoly::operator-() const {
  OrePoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

OrePoly& OrePoly::operator+=(const OrePoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  OrePoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, RatFunc());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * sigma_x(b.c_[j], static_cast<long>(i));
  }
  r.trim();
  return r;
}

OrePoly ore_mul(const OrePoly& a, const OrePoly& b) { return a * b; }

void right_divide(const OrePoly& a, const OrePoly& b, OrePoly* q, OrePoly* r) {
  if (b.is_zero()) throw std::domain_error("right_divide: division by zero operator");
  OrePoly rem = a, quo;
  int db = b.order();
  while (!rem.is_zero() && rem.order() >= db) {
    int d = rem.order() - db;
    RatFunc t = rem.lead() / sigma_x(b.lead(), d);
    OrePoly term = OrePoly(t) * OrePoly::shift(static_cast<unsigned>(d));
    quo += term;
    rem -= term * b;
  }
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

OrePoly lclm(const OrePoly& a, const OrePoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("lclm: zero operator");
  // r_i = u_i a + v_i b; the first vanishing remainder gives u a = -v b.
  OrePoly r0 = a, r1 = b, u0 = 1, u1 = 0;
  while (!r1.is_zero()) {
    OrePoly q, r;
    right_divide(r0, r1, &q, &r);
    OrePoly u = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  if (u1.is_zero()) return a.monic();
  return (u1 * a).monic();
}

OrePoly lclm(const std::vector<OrePoly>& ops) {
  if (ops.empty()) throw std::invalid_argument("lclm: empty list");
  OrePoly l = ops[0].monic();
  for (std::size_t i = 1; i < ops.size(); ++i) l = lclm(l, ops[i]);
  return l;
}

OrePoly ExponentSeparation::sum() const {
  OrePoly s;
  for (auto& p : parts) s += p;
  return s;
}

ExponentSeparation exponent_separation(const OrePoly& l, int m) {
  if (m < 1) throw std::invalid_argument("exponent_separation: modulus must be positive");
  ExponentSeparation out;
  out.m = m;
  std::vector<std::vector<RatFunc>> cs(static_cast<std::size_t>(m));
  for (int i = 0; i <= l.order(); ++i) {
    auto& v = cs[static_cast<std::size_t>(i % m)];
    v.resize(static_cast<std::size_t>(i + 1));
    v[static_cast<std::size_t>(i)] = l.coeff(i);
  }
  for (auto& v : cs) out.parts.emplace_back(std::move(v));
  return out;
}

OreMatrix OreMatrix::identity(std::size_t n) {
  OreMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

OreMatrix operator*(const OreMatrix& a, const OreMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("OreMatrix: dimension mismatch");
  OreMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

bool OreMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

OreMatrix separation_matrix(const OrePoly& l, int m) {
  ExponentSeparation sep = exponent_separation(l, m);
  std::size_t n = static_cast<std::size_t>(m);
  OreMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = sep.parts[(i + n - j) % n];
  return out;
}

Diagonalization diagonalize_Lm(const OrePoly& l, int m) {
  if (l.is_zero()) throw std::invalid_argument("diagonalize_Lm: zero operator");
  OreMatrix a = separation_matrix(l, m);
  std::size_t n = a.rows();
  OreMatrix t = OreMatrix::identity(n);
  auto row_swap = [&](OreMatrix& x, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(x(i, c), x(j, c));
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i)
      if (!a(i, c).is_zero() && (p == n || a(i, c).order() < a(p, c).order())) p = i;
    if (p == n) throw std::logic_error("diagonalize_Lm: singular matrix");
    row_swap(a, c, p);
    row_swap(t, c, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      // u * pivot = v * entry = lclm; row_i <- v * row_i - u * row_c
      OrePoly g = lclm(a(c, c), a(i, c));
      OrePoly u, v;
      right_divide(g, a(c, c), &u, nullptr);
      right_divide(g, a(i, c), &v, nullptr);
      for (std::size_t k = 0; k < n; ++k) {
        a(i, k) = v * a(i, k) - u * a(c, k);
        t(i, k) = v * t(i, k) - u * t(c, k);
      }
    }
  }
  Diagonalization out;
  for (std::size_t i = 0; i < n; ++i) {
    OrePoly s(a(i, i).lead().inverse());
    for (std::size_t k = 0; k < n; ++k) t(i, k) = s * t(i, k);
    out.diag.push_back(a(i, i).monic());
  }
  out.transform = std::move(t);
  return out;
}

std::string OrePoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = order(); i >= 0; --i) {
    const RatFunc& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "Sx" : "Sx^" + std::to_string(i));
    bool neg = false;
    std::string coef;
    if (c.is_constant()) {
      Rational v = c.constant_value();
      neg = v < 0;
      Rational a = neg ? Rational(-v) : v;
      if (a != 1 || mono.empty()) coef = a.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

OrePoly divide_for_parse(const OrePoly& a, const OrePoly& b, std::size_t pos) {
  if (b.is_zero()) throw ParseError(pos, "division by zero");
  if (b.order() != 0) throw ParseError(pos, "division by an operator of positive order");
  return a * OrePoly(b.lead().inverse());
}

OrePoly parse_ore(std::string_view text) {
  auto tree = parse_tree(text);
  auto leaf = [](const Expr& e) -> OrePoly {
    if (e.text == "Sx") return OrePoly::shift();
    if (e.text == "x") return OrePoly(RatFunc::var(X));
    throw ParseError(e.pos, "unknown identifier '" + e.text + "' in operator");
  };
  return evaluate<OrePoly>(*tree, leaf);
}

}  // namespace trisum
