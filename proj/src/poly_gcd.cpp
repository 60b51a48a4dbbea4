#include "trisum/poly_gcd.hpp"

#include "modular_gcd.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace trisum {

namespace {

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: inexact division " + a.to_string() + " / " + b.to_string());
  return *q;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

Integer max_norm(const MultiPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    Integer a = abs(t.second.get_num());
    if (a > m) m = a;
  }
  return m;
}

MultiPoly integer_primitive(const MultiPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) g = gcd(g, Integer(t.second.get_num()));
  return g == 0 || g == 1 ? p : p / Rational(g);
}

// Heuristic gcd of integer polynomials: evaluate the last variable at a large
// integer, recurse, and rebuild the gcd from the symmetric xi-adic digits.
std::optional<MultiPoly> heu_gcd(const MultiPoly& a, const MultiPoly& b, int depth) {
  unsigned mask = a.var_mask() | b.var_mask();
  if (mask == 0) return MultiPoly(Rational(gcd(a.constant_value().get_num(), b.constant_value().get_num())));
  int v = 31 - __builtin_clz(mask);
  Integer na = max_norm(a), nb = max_norm(b);
  Integer xi = 2 * (na < nb ? na : nb) + 29;
  int deg = std::max(a.degree(v), b.degree(v));
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (static_cast<long>(mpz_sizeinbase(xi.get_mpz_t(), 2)) * (deg + 1) > 100000) return std::nullopt;
    MultiPoly ea = a.evaluate(v, Rational(xi)), eb = b.evaluate(v, Rational(xi));
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto gh = heu_gcd(ea, eb, depth + 1)) {
        std::vector<MultiPoly::Term> terms;
        MultiPoly rest = *gh;
        Integer half = xi / 2;
        for (unsigned i = 0; !rest.is_zero(); ++i) {
          std::vector<MultiPoly::Term> digit;
          for (const auto& [m, c] : rest.terms()) {
            Integer r = c.get_num() % xi;
            if (r < 0) r += xi;
            if (r > half) r -= xi;
            if (r != 0) digit.emplace_back(m, Rational(r));
          }
          MultiPoly d = MultiPoly::from_terms(digit);
          for (const auto& [m, c] : d.terms()) terms.emplace_back(m * Monomial::var(v, i), c);
          rest = (rest - d) / Rational(xi);
        }
        MultiPoly g = integer_primitive(MultiPoly::from_terms(std::move(terms)));
        if (!g.is_zero() && divide_exact(a, g) && divide_exact(b, g)) {
          if (depth == 0) return g;
          // Inner levels must return the full integer gcd, content included.
          Integer ca = 0, cb = 0;
          for (const auto& t : a.terms()) ca = gcd(ca, Integer(t.second.get_num()));
          for (const auto& t : b.terms()) cb = gcd(cb, Integer(t.second.get_num()));
          return g * Rational(gcd(ca, cb));
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

MultiPoly content_rec(const MultiPoly& p, int v) {
  auto cs = p.coeffs(v);
  // Sorting by size lets gcd collapse early on the cheapest coefficients.
  std::sort(cs.begin(), cs.end(),
            [](const MultiPoly& l, const MultiPoly& r) { return l.size() < r.size(); });
  MultiPoly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.normalized() : gcd_rec(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a == b) return a.normalized();
  {
    MultiPoly na = a.normalized(), nb = b.normalized();
    if (auto g = heu_gcd(na, nb, 0)) return g->normalized();
  }
  unsigned ma = a.var_mask(), mb = b.var_mask();
  for (int v = 0; v < kNumVars; ++v) {
    unsigned bit = 1u << v;
    if ((ma & bit) && !(mb & bit)) return gcd_rec(content_rec(a, v), b);
    if ((mb & bit) && !(ma & bit)) return gcd_rec(a, content_rec(b, v));
  }
  if (auto g = detail::modular_gcd(a.normalized(), b.normalized())) return *g;
  int v = -1;
  int best = 0;
  for (int w = 0; w < kNumVars; ++w) {
    if (!(ma & (1u << w))) continue;
    int cost = a.degree(w) + b.degree(w);
    if (v < 0 || cost < best) {
      v = w;
      best = cost;
    }
  }
  MultiPoly ca = content_rec(a, v), cb = content_rec(b, v);
  MultiPoly c = gcd_rec(ca, cb);
  MultiPoly pa = exact(a, ca).normalized(), pb = exact(b, cb).normalized();
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      pb = MultiPoly(1);
      break;
    }
    pa = std::move(pb);
    pb = exact(r, content_rec(r, v)).normalized();
  }
  return (c * pb).normalized();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_rec(a, b); }

MultiPoly gcd(const std::vector<MultiPoly>& ps) {
  MultiPoly g;
  for (const auto& p : ps) {
    g = gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact(a * b, gcd(a, b)).normalized();
}

MultiPoly content(const MultiPoly& p, int v) {
  if (p.is_zero()) return {};
  return content_rec(p, v);
}

MultiPoly primitive_part(const MultiPoly& p, int v) {
  if (p.is_zero()) return p;
  return exact(p, content(p, v));
}

MultiPoly content_in(const MultiPoly& p, unsigned mask) {
  if (p.is_zero()) return {};
  std::map<std::uint64_t, std::vector<MultiPoly::Term>> groups;
  for (const auto& [m, c] : p.terms()) {
    std::array<unsigned, 3> in{0, 0, 0}, out{0, 0, 0};
    for (int v = 0; v < kNumVars; ++v) (mask & (1u << v) ? in : out)[v] = m.exp(v);
    groups[Monomial(in[0], in[1], in[2]).key()].emplace_back(Monomial(out[0], out[1], out[2]), c);
  }
  std::vector<MultiPoly> cs;
  for (auto& [k, terms] : groups) cs.push_back(MultiPoly::from_terms(std::move(terms)));
  std::sort(cs.begin(), cs.end(),
            [](const MultiPoly& l, const MultiPoly& r) { return l.size() < r.size(); });
  return gcd(cs);
}

}  // namespace trisum
