#include "trisum/partial_fractions.hpp"

#include <stdexcept>

#include "trisum/factor.hpp"
#include "trisum/poly_gcd.hpp"

namespace trisum {

RatFunc PartialFractions::value() const {
  RatFunc r = poly_part;
  for (auto& t : terms) r += t.value();
  return r;
}

namespace {

std::vector<std::pair<MultiPoly, int>> split_hinted(MultiPoly den, const std::vector<MultiPoly>& hints,
                                                    int var) {
  std::vector<std::pair<MultiPoly, int>> out;
  for (auto& h : hints) {
    if (!h.contains(var)) continue;
    int e = 0;
    while (auto q = divide_exact(den, h)) {
      den = std::move(*q);
      ++e;
    }
    if (e > 0) out.emplace_back(h.normalized(), e);
  }
  if (den.contains(var)) throw std::invalid_argument("partial_fractions: factor list does not cover the denominator");
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = i + 1; k < out.size(); ++k)
      if (!gcd(out[i].first, out[k].first).is_constant())
        throw std::invalid_argument("partial_fractions: factors are not pairwise coprime");
  return out;
}

}  // namespace

namespace {

struct PseudoDiv {
  MultiPoly q, r, scale;  // scale * a = q * b + r
};

PseudoDiv pseudo_divide(const MultiPoly& a, const MultiPoly& b, int v) {
  int db = b.degree(v);
  MultiPoly lb = b.lead_coeff(v);
  PseudoDiv out{MultiPoly(), a, MultiPoly(1)};
  while (!out.r.is_zero() && out.r.degree(v) >= db) {
    MultiPoly t = mul_monomial(out.r.lead_coeff(v), Monomial::var(v, static_cast<unsigned>(out.r.degree(v) - db)));
    out.q = out.q * lb + t;
    out.r = out.r * lb - t * b;
    out.scale *= lb;
  }
  return out;
}

// s with s * a = rho (mod g) for a var-free polynomial rho != 0; requires a, g
// coprime as polynomials in v. Returns s / rho.
RatFunc inverse_mod(const MultiPoly& a, const MultiPoly& g, int v) {
  PseudoDiv first = pseudo_divide(a, g, v);
  MultiPoly r0 = g, s0;
  MultiPoly r1 = first.r, s1 = first.scale;
  while (r1.contains(v)) {
    PseudoDiv d = pseudo_divide(r0, r1, v);
    MultiPoly r2 = d.r, s2 = d.scale * s0 - d.q * s1;
    if (r2.is_zero()) throw std::logic_error("partial_fractions: factors not coprime");
    MultiPoly c = gcd(content(r2, v), content(s2, v));
    if (!c.is_constant()) {
      r2 = *divide_exact(r2, c);
      s2 = *divide_exact(s2, c);
    }
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r2);
    s1 = std::move(s2);
  }
  PseudoDiv red = pseudo_divide(s1, g, v);
  return RatFunc(red.r, red.scale * r1);
}

}  // namespace

PartialFractions partial_fractions(const RatFunc& f, int var, const std::vector<MultiPoly>* factors) {
  PartialFractions out;
  out.var = var;
  if (!f.den().contains(var)) {
    out.poly_part = f;
    return out;
  }

  std::vector<std::pair<MultiPoly, int>> parts;
  if (factors) {
    parts = split_hinted(f.den(), *factors, var);
  } else {
    for (auto& fac : factor(f.den()).factors)
      if (fac.poly.contains(var)) parts.emplace_back(fac.poly, fac.multiplicity);
  }

  MultiPoly dvar(1);
  for (auto& [p, e] : parts) dvar *= p.pow(static_cast<unsigned>(e));
  MultiPoly unit = *divide_exact(f.den(), dvar);

  PseudoDiv top = pseudo_divide(f.num(), dvar, var);
  out.poly_part = RatFunc(top.q, top.scale * unit);
  // f = poly_part + r / (scale * unit * dvar)
  MultiPoly below = top.scale * unit;

  for (auto& [p, e] : parts) {
    MultiPoly pe = p.pow(static_cast<unsigned>(e));
    RatFunc inv = inverse_mod(*divide_exact(dvar, pe), pe, var);
    PseudoDiv comp = pseudo_divide(top.r * inv.num(), pe, var);
    // component numerator A / den with deg_var(A) < deg_var(p^e)
    MultiPoly A = comp.r;
    MultiPoly den = comp.scale * inv.den() * below;
    for (int k = 0; k < e && !A.is_zero(); ++k) {
      PseudoDiv dig = pseudo_divide(A, p, var);
      // scale * A = q * p + digit, so A / den = digit / (scale den) + (q / (scale den)) p
      den *= dig.scale;
      if (!dig.r.is_zero()) out.terms.push_back({RatFunc(dig.r, den), p, e - k});
      A = std::move(dig.q);
    }
  }
  return out;
}

std::optional<ShiftVector> integer_linear_test(const MultiPoly& p) {
  std::array<MultiPoly, 3> g{p.derivative(X), p.derivative(Y), p.derivative(Z)};
  int piv = -1;
  for (int v = 0; v < 3 && piv < 0; ++v)
    if (!g[v].is_zero()) piv = v;
  if (piv < 0) throw std::invalid_argument("integer_linear_test: constant polynomial");
  std::array<Rational, 3> ratio;
  for (int v = 0; v < 3; ++v) {
    if (g[v].is_zero()) continue;
    Rational c = g[v].leading_coeff() / g[piv].leading_coeff();
    if (g[v].leading_monomial() != g[piv].leading_monomial() || g[v] != g[piv] * c) return std::nullopt;
    ratio[v] = c;
  }
  Integer l = 1;
  for (auto& c : ratio) l = lcm(l, Integer(c.get_den()));
  std::array<Integer, 3> w;
  Integer gc = 0;
  for (int v = 0; v < 3; ++v) {
    w[v] = Integer(ratio[v] * l);
    gc = gcd(gc, w[v]);
  }
  ShiftVector out;
  for (int v = 0; v < 3; ++v) out[v] = Integer(w[v] / gc).get_si();
  return out;
}

bool is_proper(const RatFunc& f) {
  if (f.den().is_constant()) return true;
  for (auto& fac : factor(f.den()).factors)
    if (!integer_linear_test(fac.poly)) return false;
  return true;
}

}  // namespace trisum
