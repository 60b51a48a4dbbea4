#include "trisum/multipoly.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace trisum {

const char* var_name(int v) {
  static const char* names[] = {"x", "y", "z"};
  return names[v];
}

std::string to_string(const ShiftVector& s) {
  std::ostringstream os;
  os << '(' << s.m << ',' << s.n << ',' << s.k << ')';
  return os.str();
}

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace_back(Monomial(), Rational(c));
}

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial(), c);
}

MultiPoly::MultiPoly(Monomial m, const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(m, c);
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  MultiPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0) out.terms_.pop_back();
  return out;
}

MultiPoly MultiPoly::from_coeffs(int v, const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m = Monomial::var(v, static_cast<unsigned>(i));
    for (const auto& [mono, c] : coeffs[i].terms_) terms.emplace_back(mono * m, c);
  }
  return from_terms(std::move(terms));
}

Rational MultiPoly::constant_value() const {
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational MultiPoly::constant_term() const {
  if (terms_.empty() || terms_.back().first.total() != 0) return 0;
  return terms_.back().second;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.total() == 0 && terms_[0].second == 1;
}

int MultiPoly::degree(int v) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exp(v));
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.total());
}

bool MultiPoly::contains(int v) const {
  for (const auto& t : terms_)
    if (t.first.exp(v) > 0) return true;
  return false;
}

unsigned MultiPoly::var_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_)
    for (int v = 0; v < kNumVars; ++v)
      if (t.first.exp(v) > 0) mask |= 1u << v;
  return mask;
}

std::vector<MultiPoly> MultiPoly::coeffs(int v) const {
  int d = degree(v);
  if (d < 0) return {};
  std::vector<std::vector<Term>> parts(d + 1);
  for (const auto& [m, c] : terms_) parts[m.exp(v)].emplace_back(m.without(v), c);
  std::vector<MultiPoly> out(d + 1);
  // Removing one variable keeps the relative grlex order only within a slice,
  // so each slice is re-sorted.
  for (int i = 0; i <= d; ++i) out[i] = from_terms(std::move(parts[i]));
  return out;
}

MultiPoly MultiPoly::coeff(int v, int e) const {
  std::vector<Term> part;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.exp(v)) == e) part.emplace_back(m.without(v), c);
  return from_terms(std::move(part));
}

MultiPoly MultiPoly::lead_coeff(int v) const { return coeff(v, degree(v)); }

MultiPoly MultiPoly::derivative(int v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exp(v);
    if (e == 0) continue;
    std::array<unsigned, 3> a{m.exp(0), m.exp(1), m.exp(2)};
    a[v] = e - 1;
    out.emplace_back(Monomial(a[0], a[1], a[2]), c * e);
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::evaluate(int v, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exp(v);
    Rational f = c;
    if (e > 0) {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), e);
      f *= Rational(num, den);
    }
    out.emplace_back(m.without(v), f);
  }
  return from_terms(std::move(out));
}

namespace {

MultiPoly shift_one(const MultiPoly& p, int v, const Rational& s) {
  if (sgn(s) == 0 || !p.contains(v)) return p;
  int d = p.degree(v);
  // powers[e][j] = C(e, j) s^(e-j)
  std::vector<Rational> spow(d + 1);
  spow[0] = 1;
  for (int i = 1; i <= d; ++i) spow[i] = spow[i - 1] * s;
  std::vector<MultiPoly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exp(v);
    Monomial base = m.without(v);
    for (unsigned j = 0; j <= e; ++j) {
      Rational coef = c * spow[e - j] * Rational(binomial(e, j));
      out.emplace_back(base * Monomial::var(v, j), coef);
    }
  }
  return MultiPoly::from_terms(std::move(out));
}

}  // namespace

MultiPoly MultiPoly::shifted(const std::array<Rational, 3>& s) const {
  MultiPoly r = *this;
  for (int v = 0; v < kNumVars; ++v) r = shift_one(r, v, s[v]);
  return r;
}

MultiPoly MultiPoly::shifted(const ShiftVector& s) const {
  if (s.is_zero()) return *this;
  return shifted(std::array<Rational, 3>{Rational(s.m), Rational(s.n), Rational(s.k)});
}

namespace {
unsigned masked_degree(Monomial m, unsigned mask) {
  unsigned d = 0;
  for (int v = 0; v < kNumVars; ++v)
    if (mask & (1u << v)) d += m.exp(v);
  return d;
}
}  // namespace

MultiPoly MultiPoly::homogeneous_part(unsigned mask, unsigned e) const {
  MultiPoly out;
  for (const auto& t : terms_)
    if (masked_degree(t.first, mask) == e) out.terms_.push_back(t);
  return out;
}

MultiPoly MultiPoly::truncated(unsigned mask, unsigned bound) const {
  MultiPoly out;
  for (const auto& t : terms_)
    if (masked_degree(t.first, mask) < bound) out.terms_.push_back(t);
  return out;
}

unsigned MultiPoly::degree_in(unsigned mask) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, masked_degree(t.first, mask));
  return d;
}

Rational MultiPoly::normalization_unit() const {
  if (terms_.empty()) return 1;
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational unit(g, l);
  unit.canonicalize();
  if (sgn(leading_coeff()) < 0) unit = -unit;
  return unit;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  return *this / normalization_unit();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, bool negate_b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, negate_b ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].second - b[j].second)
                            : Rational(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) return mul_monomial(a, b.terms_[0].first) * b.terms_[0].second;
  if (a.terms_.size() == 1) return mul_monomial(b, a.terms_[0].first) * a.terms_[0].second;
  std::vector<MultiPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
  for (auto& t : terms_) t.second /= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second)
      return false;
  return true;
}

bool operator<(const MultiPoly& a, const MultiPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
  }
  return a.terms_.size() < b.terms_.size();
}

std::size_t MultiPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [m, c] : terms_) {
    h ^= std::hash<std::uint64_t>{}(m.key()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= mpz_get_ui(c.get_num_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || m.total() == 0) {
      os << a.get_str();
      wrote = true;
    }
    for (int v = 0; v < kNumVars; ++v) {
      unsigned e = m.exp(v);
      if (e == 0) continue;
      if (wrote) os << '*';
      os << var_name(v);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly mul_monomial(const MultiPoly& p, Monomial m) {
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [mono, c] : p.terms()) out.emplace_back(mono * m, c);
  // Multiplying by a monomial preserves grlex order.
  MultiPoly r;
  r = MultiPoly::from_terms(std::move(out));
  return r;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return MultiPoly();
  if (b.is_constant()) return a / b.constant_value();
  for (int v = 0; v < kNumVars; ++v)
    if (b.degree(v) > a.degree(v)) return std::nullopt;
  // Heap division: the pending products q_i * b_j (j >= 1) are merged lazily
  // instead of rewriting the remainder after each quotient term.
  const auto& at = a.terms();
  const auto& bt = b.terms();
  const Monomial lb = bt[0].first;
  const Rational& cb = bt[0].second;
  struct Entry {
    Monomial m;
    std::size_t i, j;
    bool operator<(const Entry& o) const { return m < o.m; }
  };
  std::priority_queue<Entry> heap;
  std::vector<MultiPoly::Term> q;
  std::size_t ai = 0;
  Rational c, prod;
  while (ai < at.size() || !heap.empty()) {
    Monomial m = (ai < at.size() && (heap.empty() || !(at[ai].first < heap.top().m))) ? at[ai].first
                                                                                     : heap.top().m;
    c = 0;
    if (ai < at.size() && at[ai].first == m) c = at[ai++].second;
    while (!heap.empty() && heap.top().m == m) {
      Entry e = heap.top();
      heap.pop();
      mpq_mul(prod.get_mpq_t(), q[e.i].second.get_mpq_t(), bt[e.j].second.get_mpq_t());
      c -= prod;
      if (e.j + 1 < bt.size()) heap.push({q[e.i].first * bt[e.j + 1].first, e.i, e.j + 1});
    }
    if (c == 0) continue;
    if (!lb.divides(m)) return std::nullopt;
    q.emplace_back(lb.quotient_of(m), c / cb);
    if (bt.size() > 1) heap.push({q.back().first * bt[1].first, q.size() - 1, 1});
  }
  return MultiPoly::from_terms(std::move(q));
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int v) {
  int db = b.degree(v);
  MultiPoly lb = b.lead_coeff(v);
  MultiPoly r = a;
  int dr = r.degree(v);
  while (!r.is_zero() && dr >= db) {
    MultiPoly lr = r.lead_coeff(v);
    r = r * lb - mul_monomial(b * lr, Monomial::var(v, static_cast<unsigned>(dr - db)));
    dr = r.degree(v);
  }
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace trisum
