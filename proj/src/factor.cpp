#include "trisum/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "trisum/poly_gcd.hpp"

namespace trisum {

namespace {

using detail::ZPoly;
using ll = long;

// ---------------------------------------------------------------------------
// Dense univariate polynomials modulo a small prime p (p < 2^31).

using MPoly = std::vector<ll>;

void trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

ll inv_mod(ll a, ll p) {
  ll t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    ll q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::logic_error("inv_mod: not invertible");
  return (t % p + p) % p;
}

MPoly msub(const MPoly& a, const MPoly& b, ll p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
  trim(r);
  return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, ll p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

void mdivmod(const MPoly& a, const MPoly& b, ll p, MPoly* q, MPoly* r) {
  MPoly rem = a;
  trim(rem);
  int db = deg(b);
  ll ib = inv_mod(b.back(), p);
  MPoly quo(std::max(0, deg(rem) - db + 1), 0);
  while (deg(rem) >= db) {
    int shift = deg(rem) - db;
    ll c = rem.back() * ib % p;
    quo[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] = ((rem[shift + i] - c * b[i]) % p + p) % p;
    trim(rem);
  }
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

MPoly mmod(const MPoly& a, const MPoly& b, ll p) {
  MPoly r;
  mdivmod(a, b, p, nullptr, &r);
  return r;
}

MPoly mquo(const MPoly& a, const MPoly& b, ll p) {
  MPoly q;
  mdivmod(a, b, p, &q, nullptr);
  return q;
}

MPoly mmonic(MPoly a, ll p) {
  if (a.empty()) return a;
  ll i = inv_mod(a.back(), p);
  for (auto& c : a) c = c * i % p;
  return a;
}

MPoly mgcd(MPoly a, MPoly b, ll p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    MPoly r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

/// s with s * a = 1 mod g (mod p); requires gcd(a, g) = 1.
MPoly minv_mod(const MPoly& a, const MPoly& g, ll p) {
  MPoly r0 = g, r1 = mmod(a, g, p), s0{}, s1{1};
  while (!r1.empty()) {
    MPoly q, r;
    mdivmod(r0, r1, p, &q, &r);
    MPoly s = msub(s0, mmul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (deg(r0) != 0) throw std::logic_error("minv_mod: not coprime");
  ll c = inv_mod(r0[0], p);
  for (auto& v : s0) v = v * c % p;
  return mmod(s0, g, p);
}

MPoly mpowmod(MPoly base, const Integer& e, const MPoly& f, ll p) {
  MPoly result{1};
  base = mmod(base, f, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mmod(mmul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mmod(mmul(result, base, p), f, p);
  }
  return result;
}

MPoly mderiv(const MPoly& a, ll p) {
  MPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<ll>(i % p) % p);
  trim(r);
  return r;
}

MPoly reduce_mod(const ZPoly& f, ll p) {
  MPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer c = f[i] % p;
    if (c < 0) c += p;
    r[i] = c.get_si();
  }
  trim(r);
  return r;
}

std::vector<std::pair<MPoly, int>> distinct_degree(MPoly f, ll p) {
  std::vector<std::pair<MPoly, int>> out;
  MPoly h{0, 1};
  for (int i = 1; deg(f) >= 2 * i; ++i) {
    h = mpowmod(h, Integer(p), f, p);
    MPoly g = mgcd(msub(h, MPoly{0, 1}, p), f, p);
    if (deg(g) > 0) {
      out.emplace_back(g, i);
      f = mquo(f, g, p);
      h = mmod(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

void equal_degree(const MPoly& g, int d, ll p, std::mt19937_64& rng, std::vector<MPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<ll> dist(0, p - 1);
  while (true) {
    MPoly a(deg(g));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    MPoly b = msub(mpowmod(a, e, g, p), MPoly{1}, p);
    MPoly c = mgcd(b, g, p);
    if (deg(c) > 0 && deg(c) < deg(g)) {
      equal_degree(c, d, p, rng, out);
      equal_degree(mquo(g, c, p), d, p, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors of a squarefree polynomial mod p.
std::vector<MPoly> factor_mod_p(const MPoly& f, ll p) {
  std::mt19937_64 rng(0x5eed + static_cast<unsigned long>(p));
  std::vector<MPoly> out;
  for (auto& [g, d] : distinct_degree(mmonic(f, p), p)) equal_degree(g, d, p, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// Dense integer polynomials.

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::optional<ZPoly> zdivide_exact(const ZPoly& a, const ZPoly& b) {
  ZPoly rem = a;
  ztrim(rem);
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(rem.size()) - 1 < db) {
    if (rem.empty()) return ZPoly{};
    return std::nullopt;
  }
  ZPoly q(rem.size() - b.size() + 1, 0);
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    int shift = static_cast<int>(rem.size()) - 1 - db;
    if (!mpz_divisible_p(rem.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c = rem.back() / b.back();
    q[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    ztrim(rem);
  }
  if (!rem.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

void symmetric_mod(ZPoly& a, const Integer& q) {
  Integer half = q / 2;
  for (auto& c : a) {
    c %= q;
    if (c < 0) c += q;
    if (c > half) c -= q;
  }
  ztrim(a);
}

bool squarefree_mod(const ZPoly& f, ll p) {
  MPoly fp = reduce_mod(f, p);
  if (deg(fp) != static_cast<int>(f.size()) - 1) return false;
  return deg(mgcd(fp, mderiv(fp, p), p)) == 0;
}

ll next_prime(ll n) {
  auto is_prime = [](ll v) {
    if (v < 2) return false;
    for (ll d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  while (!is_prime(n)) ++n;
  return n;
}

/// Linear multifactor Hensel lifting of f = lc * prod(g_i) mod p to modulus q >= bound.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<MPoly>& g, ll p,
                               const Integer& bound, Integer* modulus) {
  const std::size_t r = g.size();
  MPoly prod{1};
  for (const auto& gi : g) prod = mmul(prod, gi, p);
  std::vector<MPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = minv_mod(mquo(prod, g[i], p), g[i], p);
  const Integer& lc = f.back();
  Integer lcm = lc % p;
  if (lcm < 0) lcm += p;
  const ll lc_inv = inv_mod(lcm.get_si(), p);

  std::vector<ZPoly> F(r);
  for (std::size_t i = 0; i < r; ++i) F[i] = ZPoly(g[i].begin(), g[i].end());
  Integer q = p;
  while (q <= bound) {
    ZPoly P{lc};
    for (const auto& Fi : F) P = zmul(P, Fi);
    ZPoly E = f;
    E.resize(std::max(E.size(), P.size()), 0);
    for (std::size_t i = 0; i < P.size(); ++i) E[i] -= P[i];
    ztrim(E);
    if (E.empty()) {
      q *= p;
      continue;
    }
    MPoly e(E.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
      Integer c = E[i] / q;  // exact by construction
      c %= p;
      if (c < 0) c += p;
      e[i] = c.get_si() * lc_inv % p;
    }
    trim(e);
    for (std::size_t i = 0; i < r; ++i) {
      MPoly delta = mmod(mmul(e, s[i], p), g[i], p);
      for (std::size_t j = 0; j < delta.size(); ++j) F[i][j] += q * delta[j];
    }
    q *= p;
  }
  *modulus = q;
  return F;
}

Integer coefficient_bound(const ZPoly& f) {
  Integer norm = 0;
  for (const auto& c : f) norm += abs(c);
  Integer b = abs(f.back()) * norm * 2;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.size());
  return b;
}

}  // namespace

namespace detail {

std::vector<ZPoly> factor_squarefree_univariate(const ZPoly& input) {
  ZPoly f = input;
  ztrim(f);
  if (f.size() <= 2) return {f};
  // Choose the prime giving the fewest modular factors among a few candidates.
  ll best_p = 0;
  std::vector<MPoly> best;
  ll p = 3;
  for (int tried = 0; tried < 6; p = next_prime(p + 1)) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    if (!squarefree_mod(f, p)) continue;
    auto fac = factor_mod_p(reduce_mod(f, p), p);
    ++tried;
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) return {f};
  }
  Integer q;
  std::vector<ZPoly> lifted = hensel_lift(f, best, best_p, coefficient_bound(f), &q);

  std::vector<ZPoly> out;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  for (std::size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{f.back()};
      for (std::size_t i : idx) cand = zmul(cand, lifted[remaining[i]]);
      symmetric_mod(cand, q);
      Integer c = zcontent(cand);
      if (c != 0) {
        for (auto& v : cand) v /= c;
        if (auto quo = zdivide_exact(f, cand)) {
          out.push_back(cand);
          f = *quo;
          std::vector<std::size_t> keep;
          for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
            if (j < s && idx[j] == i) {
              ++j;
              continue;
            }
            keep.push_back(remaining[i]);
          }
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == remaining.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) {
    if (f.back() < 0)
      for (auto& v : f) v = -v;
    out.push_back(f);
  }
  return out;
}

}  // namespace detail

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, used for the Bezout data of lifting.

using QPoly = std::vector<Rational>;

void qtrim(QPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qtrim(r);
  return r;
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly* q, QPoly* r) {
  QPoly rem = a;
  qtrim(rem);
  int db = static_cast<int>(b.size()) - 1;
  QPoly quo(std::max<int>(0, static_cast<int>(rem.size()) - db), Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    int shift = static_cast<int>(rem.size()) - 1 - db;
    Rational c = rem.back() / b.back();
    quo[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    qtrim(rem);
  }
  qtrim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

QPoly qmod(const QPoly& a, const QPoly& b) {
  QPoly r;
  qdivmod(a, b, nullptr, &r);
  return r;
}

QPoly qinv_mod(const QPoly& a, const QPoly& g) {
  QPoly r0 = g, r1 = qmod(a, g), s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, &q, &r);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::logic_error("qinv_mod: not coprime");
  for (auto& c : s0) c /= r0[0];
  return qmod(s0, g);
}

QPoly to_qpoly(const MultiPoly& p, int v) {
  QPoly r(std::max(0, p.degree(v) + 1), Rational(0));
  for (const auto& [m, c] : p.terms()) r[m.exp(v)] += c;
  return r;
}

MultiPoly from_qpoly(const QPoly& a, int v) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) terms.emplace_back(Monomial::var(v, static_cast<unsigned>(i)), a[i]);
  return MultiPoly::from_terms(std::move(terms));
}

ZPoly to_zpoly(const MultiPoly& p, int v) {
  MultiPoly q = p.normalized();
  ZPoly r(std::max(0, q.degree(v) + 1), Integer(0));
  for (const auto& [m, c] : q.terms()) r[m.exp(v)] = c.get_num();
  return r;
}

MultiPoly from_zpoly(const ZPoly& a, int v) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) terms.emplace_back(Monomial::var(v, static_cast<unsigned>(i)), Rational(a[i]));
  return MultiPoly::from_terms(std::move(terms));
}

bool is_squarefree_in(const MultiPoly& u, int v) {
  return gcd(u, u.derivative(v)).degree(v) == 0;
}

/// Irreducible factors of F, squarefree and primitive with respect to v.
std::vector<MultiPoly> factor_squarefree(const MultiPoly& F, int v) {
  if (F.degree(v) <= 1) return {F.normalized()};
  const unsigned wmask = F.var_mask() & ~(1u << v);
  if (wmask == 0) {
    std::vector<MultiPoly> out;
    for (const auto& z : detail::factor_squarefree_univariate(to_zpoly(F, v)))
      out.push_back(from_zpoly(z, v).normalized());
    return out;
  }
  std::vector<int> wvars;
  for (int w = 0; w < kNumVars; ++w)
    if (wmask & (1u << w)) wvars.push_back(w);

  // Pick an evaluation point keeping the v-degree and squarefreeness,
  // preferring the one with the fewest univariate image factors.
  MultiPoly lc = F.lead_coeff(v);
  std::mt19937_64 rng(0xfac7);
  std::array<Rational, 3> best_point{0, 0, 0};
  std::vector<ZPoly> best_images;
  bool have = false;
  int good = 0;
  for (int attempt = 0; attempt < 400 && good < 3; ++attempt) {
    std::array<Rational, 3> pt{0, 0, 0};
    long range = attempt < 1 ? 0 : 1 + attempt / 8;
    std::uniform_int_distribution<long> dist(-range, range);
    for (int w : wvars) pt[w] = attempt == 0 ? 0 : dist(rng);
    MultiPoly lcv = lc, u = F;
    for (int w : wvars) {
      lcv = lcv.evaluate(w, pt[w]);
      u = u.evaluate(w, pt[w]);
    }
    if (lcv.is_zero()) continue;
    if (!is_squarefree_in(u, v)) continue;
    ++good;
    auto images = detail::factor_squarefree_univariate(to_zpoly(u, v));
    if (!have || images.size() < best_images.size()) {
      have = true;
      best_point = pt;
      best_images = std::move(images);
    }
    if (best_images.size() == 1) break;
  }
  if (!have) throw std::runtime_error("factor: no good evaluation point found");
  if (best_images.size() == 1) return {F.normalized()};

  MultiPoly G = F.shifted(best_point);
  MultiPoly lcG = G.lead_coeff(v);
  Rational l0 = lcG.constant_term();
  const std::size_t r = best_images.size();
  std::vector<QPoly> u(r);
  for (std::size_t i = 0; i < r; ++i) {
    u[i] = to_qpoly(from_zpoly(best_images[i], v), v);
    Rational lead = u[i].back();
    for (auto& c : u[i]) c /= lead;
  }
  QPoly prod{Rational(1)};
  for (const auto& ui : u) prod = qmul(prod, ui);
  std::vector<QPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    QPoly cof;
    qdivmod(prod, u[i], &cof, nullptr);
    s[i] = qinv_mod(cof, u[i]);
  }
  const unsigned N = lcG.degree_in(wmask) + G.degree_in(wmask) + 1;
  std::vector<MultiPoly> Fi(r);
  for (std::size_t i = 0; i < r; ++i) Fi[i] = from_qpoly(u[i], v);
  for (unsigned k = 1; k < N; ++k) {
    MultiPoly P = lcG.truncated(wmask, k + 1);
    for (const auto& f : Fi) P = (P * f).truncated(wmask, k + 1);
    MultiPoly E = (G.truncated(wmask, k + 1) - P).homogeneous_part(wmask, k);
    if (E.is_zero()) continue;
    // Split E by its w-monomial.
    std::map<std::uint64_t, std::pair<Monomial, std::vector<MultiPoly::Term>>> parts;
    for (const auto& [m, c] : E.terms()) {
      Monomial wm = m.without(v);
      auto& slot = parts[wm.key()];
      slot.first = wm;
      slot.second.emplace_back(Monomial::var(v, m.exp(v)), c / l0);
    }
    for (auto& [key, part] : parts) {
      QPoly e = to_qpoly(MultiPoly::from_terms(part.second), v);
      for (std::size_t i = 0; i < r; ++i) {
        QPoly delta = qmod(qmul(e, s[i]), u[i]);
        Fi[i] += mul_monomial(from_qpoly(delta, v), part.first);
      }
    }
  }

  std::vector<MultiPoly> out;
  std::vector<std::size_t> remaining(r);
  for (std::size_t i = 0; i < r; ++i) remaining[i] = i;
  MultiPoly Gc = G;
  for (std::size_t sz = 1; 2 * sz <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> idx(sz);
    for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
    MultiPoly lcc = Gc.lead_coeff(v);
    while (true) {
      MultiPoly cand = lcc;
      for (std::size_t i : idx) cand = (cand * Fi[remaining[i]]).truncated(wmask, N);
      if (cand.degree(v) > 0) {
        MultiPoly pp = primitive_part(cand, v).normalized();
        if (auto quo = divide_exact(Gc, pp)) {
          out.push_back(pp);
          Gc = *quo;
          std::vector<std::size_t> keep;
          for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
            if (j < sz && idx[j] == i) {
              ++j;
              continue;
            }
            keep.push_back(remaining[i]);
          }
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      std::size_t k = sz;
      while (k > 0 && idx[k - 1] == remaining.size() - sz + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++sz;
  }
  if (Gc.degree(v) > 0) out.push_back(Gc.normalized());
  std::array<Rational, 3> back{-best_point[0], -best_point[1], -best_point[2]};
  for (auto& f : out) f = f.shifted(back).normalized();
  return out;
}

void factor_rec(const MultiPoly& P, std::map<MultiPoly, int>& acc, int mult) {
  if (P.is_constant()) return;
  int v = -1;
  for (int w = 0; w < kNumVars; ++w) {
    int d = P.degree(w);
    if (d > 0 && (v < 0 || d < P.degree(v))) v = w;
  }
  MultiPoly c = content(P, v);
  MultiPoly prim = P;
  if (!c.is_constant()) {
    factor_rec(c, acc, mult);
    prim = *divide_exact(P, c);
  }
  for (auto& [a, i] : squarefree_decomposition(prim, v))
    for (auto& f : factor_squarefree(a, v)) acc[f] += i * mult;
}

}  // namespace

std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p, int v) {
  std::vector<std::pair<MultiPoly, int>> out;
  if (p.degree(v) <= 0) return out;
  MultiPoly dp = p.derivative(v);
  MultiPoly g = gcd(p, dp);
  MultiPoly c = *divide_exact(p, g);
  MultiPoly d = *divide_exact(dp, g) - c.derivative(v);
  for (int i = 1; c.degree(v) > 0; ++i) {
    MultiPoly a = gcd(c, d);
    if (a.degree(v) > 0) out.emplace_back(a, i);
    c = *divide_exact(c, a);
    d = *divide_exact(d, a) - c.derivative(v);
  }
  return out;
}

MultiPoly Factorization::expand() const {
  MultiPoly r(content);
  for (const auto& f : factors) r *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

Factorization factor(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  std::map<MultiPoly, int> acc;
  factor_rec(p.normalized(), acc, 1);
  Factorization out;
  MultiPoly prod(1);
  for (auto& [f, m] : acc) {
    out.factors.push_back({f, m});
    prod *= f.pow(static_cast<unsigned>(m));
  }
  out.content = p.leading_coeff() / prod.leading_coeff();
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.total_degree() != b.poly.total_degree())
      return a.poly.total_degree() < b.poly.total_degree();
    return b.poly < a.poly;
  });
  return out;
}

}  // namespace trisum
