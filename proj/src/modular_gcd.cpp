#include "modular_gcd.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

namespace trisum::detail {

namespace {

using u64 = std::uint64_t;
using Key = std::array<int, 3>;  // exponents in the chosen variable order
using Flat = std::map<Key, u64>;
using UPoly = std::vector<u64>;  // dense, low degree first, no trailing zeros
using Rec = std::map<Key, UPoly>;  // key has the evaluation exponent cleared

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(const Integer& z) const {
    Integer r = z % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }
};

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 eval(const Field& F, const UPoly& a, u64 x) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

UPoly mul(const Field& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

UPoly scale(const Field& F, UPoly a, u64 c) {
  for (auto& x : a) x = F.mul(x, c);
  trim(a);
  return a;
}

// a = q*b + r
void divrem(const Field& F, UPoly a, const UPoly& b, UPoly* q, UPoly* r) {
  int db = deg(b);
  u64 li = F.inv(b.back());
  UPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int i = deg(a); i >= db; --i) {
    u64 c = F.mul(a[i], li);
    if (c == 0) continue;
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
  }
  trim(a);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(a);
}

UPoly monic(const Field& F, const UPoly& a) { return a.empty() ? a : scale(F, a, F.inv(a.back())); }

UPoly ugcd(const Field& F, UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r;
    divrem(F, a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Key lead(const Flat& a) { return a.rbegin()->first; }

Flat make_monic(const Field& F, Flat a) {
  u64 li = F.inv(a.rbegin()->second);
  for (auto& [k, c] : a) c = F.mul(c, li);
  return a;
}

Rec split(const Flat& a, int z) {
  Rec r;
  for (auto& [k, c] : a) {
    Key kk = k;
    int e = kk[z];
    kk[z] = 0;
    UPoly& u = r[kk];
    if (static_cast<int>(u.size()) <= e) u.resize(e + 1, 0);
    u[e] = c;
  }
  return r;
}

Flat join(const Rec& r, int z) {
  Flat a;
  for (auto& [k, u] : r)
    for (std::size_t e = 0; e < u.size(); ++e)
      if (u[e]) {
        Key kk = k;
        kk[z] = static_cast<int>(e);
        a[kk] = u[e];
      }
  return a;
}

UPoly content(const Field& F, const Rec& r) {
  UPoly g;
  for (auto& [k, u] : r) {
    g = ugcd(F, g, u);
    if (g.size() == 1) break;
  }
  return g;
}

Rec divide(const Field& F, Rec r, const UPoly& c) {
  if (c.size() == 1) return r;
  for (auto& [k, u] : r) divrem(F, u, c, &u, nullptr);
  return r;
}

// Monic gcd mod p of polynomials in the variables at positions 0..k-1.
Flat pgcd(const Field& F, const Flat& a, const Flat& b, int k) {
  int z = k - 1;
  if (k == 1) {
    Rec ra = split(a, 0), rb = split(b, 0);
    UPoly g = ugcd(F, ra.begin()->second, rb.begin()->second);
    return join(Rec{{Key{0, 0, 0}, g}}, 0);
  }
  Rec ra = split(a, z), rb = split(b, z);
  UPoly ca = content(F, ra), cb = content(F, rb), c = ugcd(F, ca, cb);
  ra = divide(F, ra, ca);
  rb = divide(F, rb, cb);
  const UPoly &la = ra.rbegin()->second, &lb = rb.rbegin()->second;
  UPoly gamma = ugcd(F, la, lb);
  int dza = 0, dzb = 0;
  for (auto& [kk, u] : ra) dza = std::max(dza, deg(u));
  for (auto& [kk, u] : rb) dzb = std::max(dzb, deg(u));
  int need = deg(gamma) + std::min(dza, dzb) + 1;

  Rec h;
  UPoly q{1};
  Key lm{};
  int have = 0;
  for (u64 alpha = 1; have < need; ++alpha) {
    if (eval(F, la, alpha) == 0 || eval(F, lb, alpha) == 0) continue;
    Flat ea, eb;
    for (auto& [kk, u] : ra)
      if (u64 v = eval(F, u, alpha)) ea[kk] = v;
    for (auto& [kk, u] : rb)
      if (u64 v = eval(F, u, alpha)) eb[kk] = v;
    Flat ga = pgcd(F, ea, eb, k - 1);
    Key l = lead(ga);
    if (l == Key{0, 0, 0}) {
      h = Rec{{Key{0, 0, 0}, UPoly{1}}};
      break;
    }
    if (have > 0 && l > lm) continue;
    if (have == 0 || l < lm) {
      h.clear();
      q = UPoly{1};
      have = 0;
      lm = l;
    }
    u64 s = eval(F, gamma, alpha);
    u64 qa_inv = F.inv(eval(F, q, alpha));
    std::map<Key, u64> vals;
    for (auto& [kk, v] : ga) vals[kk] = F.mul(v, s);
    for (auto& [kk, u] : h) vals.emplace(kk, 0);
    for (auto& [kk, v] : vals) {
      UPoly& u = h[kk];
      u64 diff = F.sub(v, eval(F, u, alpha));
      if (diff == 0) continue;
      UPoly add = scale(F, q, F.mul(diff, qa_inv));
      if (u.size() < add.size()) u.resize(add.size(), 0);
      for (std::size_t i = 0; i < add.size(); ++i) u[i] = F.add(u[i], add[i]);
      trim(u);
    }
    for (auto it = h.begin(); it != h.end();) it = it->second.empty() ? h.erase(it) : std::next(it);
    q = mul(F, q, UPoly{F.sub(0, alpha), 1});
    ++have;
  }
  h = divide(F, h, content(F, h));
  for (auto& [kk, u] : h) u = mul(F, u, c);
  return make_monic(F, join(h, z));
}

}  // namespace

std::optional<MultiPoly> modular_gcd(const MultiPoly& a, const MultiPoly& b, int max_primes) {
  unsigned mask = a.var_mask() | b.var_mask();
  std::vector<int> order;
  for (int v = 0; v < kNumVars; ++v)
    if (mask & (1u << v)) order.push_back(v);
  if (order.empty()) return std::nullopt;
  // Evaluation variables go last; put the low-degree ones there.
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
    return std::max(a.degree(u), b.degree(u)) > std::max(a.degree(v), b.degree(v));
  });
  int k = static_cast<int>(order.size());
  auto key_of = [&](Monomial m) {
    Key kk{0, 0, 0};
    for (int i = 0; i < k; ++i) kk[i] = static_cast<int>(m.exp(order[i]));
    return kk;
  };
  auto to_ints = [&](const MultiPoly& p) {
    std::map<Key, Integer> r;
    for (auto& [m, c] : p.terms()) r[key_of(m)] = c.get_num();
    return r;
  };
  std::map<Key, Integer> ia = to_ints(a), ib = to_ints(b);
  Integer lca = ia.rbegin()->second, lcb = ib.rbegin()->second;
  Integer gamma = gcd(lca, lcb);

  std::map<Key, Integer> acc;
  Integer modulus = 1;
  Key lm{};
  Integer p = Integer(1) << 62;
  for (int tries = 0; tries < max_primes; ++tries) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    Field F{p.get_ui()};
    if (F.from(lca) == 0 || F.from(lcb) == 0) continue;
    Flat fa, fb;
    for (auto& [kk, c] : ia)
      if (u64 v = F.from(c)) fa[kk] = v;
    for (auto& [kk, c] : ib)
      if (u64 v = F.from(c)) fb[kk] = v;
    Flat g = pgcd(F, fa, fb, k);
    Key l = lead(g);
    if (l == Key{0, 0, 0}) return MultiPoly(1);
    if (modulus > 1 && l > lm) continue;
    if (modulus == 1 || l < lm) {
      acc.clear();
      modulus = 1;
      lm = l;
    }
    u64 s = F.from(gamma);
    Integer pz(static_cast<unsigned long>(F.p));
    Integer next = modulus * pz, half = next / 2;
    Integer minv;
    mpz_invert(minv.get_mpz_t(), Integer(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    bool changed = false;
    for (auto& [kk, v] : g) acc.emplace(kk, 0);
    for (auto& [kk, c] : acc) {
      auto it = g.find(kk);
      u64 r = it == g.end() ? 0 : F.mul(it->second, s);
      Integer t = (Integer(static_cast<unsigned long>(r)) - c) % pz;
      if (t < 0) t += pz;
      t = t * minv % pz;
      Integer nc = c + modulus * t;
      if (nc > half) nc -= next;
      if (nc != c) changed = true;
      c = nc;
    }
    modulus = next;
    if (changed) continue;
    std::vector<MultiPoly::Term> terms;
    for (auto& [kk, c] : acc) {
      if (c == 0) continue;
      std::array<unsigned, 3> e{0, 0, 0};
      for (int i = 0; i < k; ++i) e[order[i]] = static_cast<unsigned>(kk[i]);
      terms.emplace_back(Monomial(e[0], e[1], e[2]), Rational(c));
    }
    MultiPoly cand = MultiPoly::from_terms(std::move(terms)).normalized();
    if (divide_exact(a, cand) && divide_exact(b, cand)) return cand;
  }
  return std::nullopt;
}

}  // namespace trisum::detail
