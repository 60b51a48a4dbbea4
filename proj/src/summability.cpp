#include "trisum/summability.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <stdexcept>

#include "trisum/partial_fractions.hpp"
#include "trisum/shift_equiv.hpp"

namespace trisum {

namespace {

ShiftVector along(int var, long s) {
  ShiftVector v;
  v[var] = s;
  return v;
}

std::vector<RatFunc> coeffs_in(const RatFunc& f, int var) {
  std::vector<RatFunc> out;
  for (auto& c : f.num().coeffs(var)) out.emplace_back(c, f.den());
  return out;
}

RatFunc var_power(int var, unsigned e) { return RatFunc(MultiPoly::var(var).pow(e)); }

// sum_{i=0}^{m-1} sigma^(step i) w for m >= 0, and -sum_{i=m}^{-1} for m < 0,
// so that sigma^(step m) w - w = (sigma^step - 1) of the result.
RatFunc sum_of_shifts(const RatFunc& w, int var, long step, long m) {
  RatFunc out;
  if (m >= 0) {
    for (long i = 0; i < m; ++i) out += w.shifted(along(var, step * i));
  } else {
    for (long i = m; i < 0; ++i) out -= w.shifted(along(var, step * i));
  }
  return out;
}

long floor_mod(long a, long b) {
  long r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace

RatFunc SimpleFraction::value() const { return a / RatFunc(d.pow(static_cast<unsigned>(j))); }

bool check_certificate(const RatFunc& f, const RatFunc& g, const RatFunc& h) {
  return f == delta_y(g) + delta_z(h);
}

std::pair<RatFunc, RatFunc> shift_difference_certificate(const RatFunc& w, long n, long k) {
  // sigma_y^n sigma_z^k - 1 = (sigma_y^n - 1) sigma_z^k + (sigma_z^k - 1)
  RatFunc wz = k == 0 ? w : w.shifted(ShiftVector{0, 0, k});
  return {sum_of_shifts(wz, Y, 1, n), sum_of_shifts(w, Z, 1, k)};
}

RatFunc polynomial_antidifference(const RatFunc& p, int var, long step) {
  if (p.is_zero()) return {};
  std::vector<RatFunc> c = coeffs_in(p, var);
  int deg = static_cast<int>(c.size()) - 1;
  std::vector<RatFunc> u(static_cast<std::size_t>(deg + 2));
  Integer st(step);
  for (int i = deg; i >= 0; --i) {
    // coefficient of var^i in U(var+step) - U(var): sum_{k>i} U_k C(k,i) step^(k-i)
    RatFunc rhs = c[static_cast<std::size_t>(i)];
    Integer pw = st * st;
    for (int k = i + 2; k <= deg + 1; ++k, pw *= st)
      rhs -= u[static_cast<std::size_t>(k)] * RatFunc(Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) * pw));
    u[static_cast<std::size_t>(i + 1)] = rhs * RatFunc(Rational(Integer(1), Integer((i + 1) * st)));
  }
  RatFunc out;
  for (int k = 1; k <= deg + 1; ++k) out += u[static_cast<std::size_t>(k)] * var_power(var, static_cast<unsigned>(k));
  return out;
}

std::optional<RatFunc> solve_step_difference(const RatFunc& r, int var, long step) {
  if (step <= 0) throw std::invalid_argument("solve_step_difference: step must be positive");
  if (r.is_zero()) return RatFunc();
  PartialFractions pf = partial_fractions(r, var);
  RatFunc u = polynomial_antidifference(pf.poly_part, var, step);

  std::vector<MultiPoly> reps;
  std::map<std::tuple<std::size_t, int, long>, RatFunc> classes;
  for (auto& term : pf.terms) {
    std::size_t oi = reps.size();
    long s = 0;
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (auto v = find_shift(reps[i], term.d, 1u << var)) {
        oi = i;
        s = (*v)[var];
        break;
      }
    if (oi == reps.size()) reps.push_back(term.d);
    long s0 = floor_mod(s, step), m = (s - s0) / step;
    // c / q^j = sigma^(step m)(w1), w1 = sigma^(-step m)(c) / rep(var+s0)^j
    RatFunc c = m == 0 ? term.a : term.a.shifted(along(var, -step * m));
    MultiPoly q0 = reps[oi].shifted(along(var, s0));
    RatFunc w1 = c / RatFunc(q0.pow(static_cast<unsigned>(term.j)));
    if (m != 0) u += sum_of_shifts(w1, var, step, m);
    classes[{oi, term.j, s0}] += c;
  }
  for (auto& [key, num] : classes)
    if (!num.is_zero()) return std::nullopt;
  if (u.shifted(along(var, step)) - u != r) throw std::logic_error("solve_step_difference: verification failed");
  return u;
}

std::optional<RatFunc> solve_shift_difference(const RatFunc& a, const MultiPoly& d, long t, long l) {
  if (t <= 0) throw std::invalid_argument("solve_shift_difference: t must be positive");
  if (d.shifted(ShiftVector{0, t, 0}) != d.shifted(ShiftVector{0, 0, l}))
    throw std::invalid_argument("solve_shift_difference: sigma_y^t(d) != sigma_z^l(d)");
  int n = d.degree(Z);
  if (a.den().contains(Z) || a.num().degree(Z) >= n)
    throw std::invalid_argument("solve_shift_difference: numerator degree in z too large");
  if (a.is_zero()) return RatFunc();
  std::vector<RatFunc> ak = coeffs_in(a, Z);
  ak.resize(static_cast<std::size_t>(n));
  std::vector<RatFunc> p(static_cast<std::size_t>(n)), pt(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    // coefficient of z^k: sum_{i>=k} p_i(y+t) C(i,k) (-l)^(i-k) - p_k(y) = a_k
    RatFunc rhs = ak[static_cast<std::size_t>(k)];
    Integer pw = -l;
    for (int i = k + 1; i < n; ++i, pw *= -l)
      if (!pt[static_cast<std::size_t>(i)].is_zero())
        rhs -= pt[static_cast<std::size_t>(i)] *
               RatFunc(Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(k)) * pw));
    auto u = solve_step_difference(rhs, Y, t);
    if (!u) return std::nullopt;
    p[static_cast<std::size_t>(k)] = *u;
    pt[static_cast<std::size_t>(k)] = u->shifted(ShiftVector{0, t, 0});
  }
  RatFunc out;
  for (int k = 0; k < n; ++k) out += p[static_cast<std::size_t>(k)] * var_power(Z, static_cast<unsigned>(k));
  if (out.shifted(ShiftVector{0, t, -l}) - out != a) throw std::logic_error("solve_shift_difference: verification failed");
  return out;
}

namespace {

struct Decomposed {
  AdditiveDecomposition ad;
  std::vector<SummabilityWitness> witnesses;
};

Decomposed decompose(const RatFunc& f, Base base, const std::vector<MultiPoly>* den_factors) {
  if (base == Base::Q && f.contains(X)) throw std::invalid_argument("summability over Q: input depends on x");
  Decomposed out;
  AdditiveDecomposition& ad = out.ad;
  PartialFractions pf = partial_fractions(f, Z, den_factors);
  ad.h = polynomial_antidifference(pf.poly_part, Z, 1);

  // Orbits under y, z shifts, each represented by its smallest member.
  std::vector<std::vector<MultiPoly>> orbits;
  for (auto& t : pf.terms) {
    bool placed = false;
    for (auto& o : orbits) {
      if (std::find(o.begin(), o.end(), t.d) != o.end() || find_shift(o[0], t.d, 6)) {
        if (std::find(o.begin(), o.end(), t.d) == o.end()) o.push_back(t.d);
        placed = true;
        break;
      }
    }
    if (!placed) orbits.push_back({t.d});
  }
  std::vector<MultiPoly> reps;
  for (auto& o : orbits) reps.push_back(*std::min_element(o.begin(), o.end()));

  std::map<std::pair<std::size_t, int>, RatFunc> buckets;
  for (auto& t : pf.terms) {
    std::size_t oi = 0;
    while (std::find(orbits[oi].begin(), orbits[oi].end(), t.d) == orbits[oi].end()) ++oi;
    ShiftVector v = *find_shift(reps[oi], t.d, 6);
    RatFunc a0 = v.is_zero() ? t.a : t.a.shifted(-v);
    if (!v.is_zero()) {
      RatFunc w0 = a0 / RatFunc(reps[oi].pow(static_cast<unsigned>(t.j)));
      auto [g, h] = shift_difference_certificate(w0, v.n, v.k);
      ad.g += g;
      ad.h += h;
    }
    buckets[{oi, t.j}] += a0;
  }

  for (auto& [key, num] : buckets) {
    if (num.is_zero()) continue;
    const MultiPoly& d = reps[key.first];
    int j = key.second;
    if (auto per = minimal_yz_period(stabilizer_lattice(d))) {
      long t = per->n, l = -per->k;
      if (auto p = solve_shift_difference(num, d, t, l)) {
        RatFunc w = *p / RatFunc(d.pow(static_cast<unsigned>(j)));
        auto [g, h] = shift_difference_certificate(w, t, -l);
        ad.g += g;
        ad.h += h;
        out.witnesses.push_back({d, j, t, l, *p});
        continue;
      }
    }
    ad.residue.push_back({num, d, j});
  }

  RatFunc rest = f;
  for (auto& r : ad.residue) rest -= r.value();
  if (!check_certificate(rest, ad.g, ad.h)) throw std::logic_error("additive_decomposition: verification failed");
  return out;
}

}  // namespace

AdditiveDecomposition additive_decomposition(const RatFunc& f, Base base, const std::vector<MultiPoly>* den_factors) {
  return decompose(f, base, den_factors).ad;
}

SummabilityResult is_summable(const RatFunc& f, Base base, const std::vector<MultiPoly>* den_factors) {
  Decomposed d = decompose(f, base, den_factors);
  SummabilityResult out;
  out.summable = d.ad.residue.empty();
  out.witnesses = std::move(d.witnesses);
  out.residue = std::move(d.ad.residue);
  if (out.summable) out.certificate = std::make_pair(std::move(d.ad.g), std::move(d.ad.h));
  return out;
}

}  // namespace trisum
