#include "trisum/telescoper.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "trisum/linalg.hpp"
#include "trisum/partial_fractions.hpp"
#include "trisum/poly_gcd.hpp"
#include "trisum/shift_equiv.hpp"

namespace trisum {

namespace {

constexpr unsigned kYZ = 6;

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

MultiPoly x_shifted(const MultiPoly& p, long m) { return p.shifted(ShiftVector{m, 0, 0}); }

MultiPoly strip_content(const MultiPoly& p) {
  MultiPoly c = content_in(p, kYZ);
  return *divide_exact(p, c);
}

// Irreducible z-dependent factors of the denominator of an image L(r), r a
// sum of terms of one group: x-shifts of the term denominators.
std::vector<MultiPoly> image_factors(const OrbitGroup& grp, int order, const MultiPoly& den) {
  std::set<MultiPoly> cands;
  for (auto& t : grp.terms)
    for (long i = 0; i <= order; ++i) cands.insert(x_shifted(grp.denominator(t), i).normalized());
  std::vector<MultiPoly> out;
  MultiPoly rest = den;
  for (auto& c : cands) {
    bool used = false;
    while (auto q = divide_exact(rest, c)) {
      rest = *q;
      used = true;
    }
    if (used) out.push_back(c);
  }
  if (rest.contains(Z)) out.clear();
  return out;
}

/// Outcome for one fraction b / d^j of the orbit form.
struct FractionAnalysis {
  bool exists = true;
  CaseTag tag = CaseTag::NecessaryII;
  RatFunc exists_part;              // needs a nontrivial operator
  std::vector<MultiPoly> fixed;     // polynomials the operator's shift must fix
};

CaseTag merge_tags(const std::set<CaseTag>& tags) {
  if (tags.empty()) return CaseTag::NecessaryII;
  if (tags.size() == 1) return *tags.begin();
  return CaseTag::Combined;
}

FractionAnalysis analyze(const RatFunc& b, const MultiPoly& d, int lambda) {
  FractionAnalysis out;
  RatFunc dl(d.pow(static_cast<unsigned>(lambda)));
  MultiPoly b1 = strip_content(b.num()), c1 = strip_content(b.den());
  RatFunc scale = b / RatFunc(b1, c1);  // lies in Q(x)
  RatFunc f1 = RatFunc(b1, c1) / dl;

  Lattice stab = stabilizer_lattice(d);
  auto period = minimal_x_period(stab);
  if (!period) {
    bool s = is_summable(f1, Base::QX).summable;
    out.exists = s;
    out.tag = s ? CaseTag::CR1Summable : CaseTag::CR1NotSummable;
    return out;
  }
  // sigma_x^m d = sigma_y^n sigma_z^k d with (m, -n, -k) = period
  ShiftVector yx{period->m, period->n, 0};
  bool d2 = minimal_yz_period(stab).has_value();

  std::set<CaseTag> tags;
  out.fixed.push_back(d);
  RatFunc exists_sum;
  std::map<int, RatFunc> rest;  // y-multiplicity -> sum of numerators over c_i^mult
  PartialFractions pf = partial_fractions(RatFunc(b1, c1), Y);
  if (!pf.poly_part.is_zero()) {
    exists_sum += pf.poly_part;
    tags.insert(CaseTag::NecessaryII);
  }
  std::set<MultiPoly> fixed_c;
  for (auto& t : pf.terms) {
    if (t.d.shifted(yx) == t.d) {
      tags.insert(CaseTag::NecessaryII);
    } else if (d2 && minimal_x_period(stabilizer_lattice(t.d))) {
      tags.insert(CaseTag::ProperI);
    } else {
      rest[t.j] += t.value();
      continue;
    }
    exists_sum += t.value();
    fixed_c.insert(t.d);
  }
  out.fixed.insert(out.fixed.end(), fixed_c.begin(), fixed_c.end());
  out.exists_part = scale * exists_sum / dl;

  if (!rest.empty()) {
    if (!d2) {
      out.exists = false;
      out.tag = CaseTag::Suff1NonZero;
      return out;
    }
    for (auto& [mult, part] : rest)
      if (!is_summable(part / dl, Base::QX).summable) {
        out.exists = false;
        out.tag = CaseTag::Suff2NotSummable;
        return out;
      }
    tags.insert(CaseTag::Suff2Summable);
  }
  out.tag = merge_tags(tags);
  return out;
}

/// Coefficients in Q(x) of w with respect to the monomials in y, z.
std::map<std::pair<unsigned, unsigned>, RatFunc> yz_coefficients(const RatFunc& w) {
  std::map<std::pair<unsigned, unsigned>, std::vector<MultiPoly::Term>> parts;
  for (auto& [m, c] : w.num().terms()) parts[{m.exp(Y), m.exp(Z)}].emplace_back(Monomial(m.exp(X), 0, 0), c);
  std::map<std::pair<unsigned, unsigned>, RatFunc> out;
  for (auto& [key, terms] : parts) out.emplace(key, RatFunc(MultiPoly::from_terms(terms), w.den()));
  return out;
}

/// L = sum_i l_i S_x^(i M) with sum_i l_i sigma^(i v)(numerator) = 0, where
/// v = (M, N, K) fixes the denominator of e up to factors in x alone.
std::optional<OrePoly> numerator_ansatz(const RatFunc& e, const std::vector<MultiPoly>& fixed, int max_order) {
  auto v = minimal_x_period(joint_stabilizer(fixed));
  if (!v) throw std::logic_error("no common shift for the telescoper ansatz");
  MultiPoly d0 = content_in(e.den(), kYZ);
  MultiPoly d1 = *divide_exact(e.den(), d0);
  if (d1.shifted(*v) != d1) throw std::logic_error("ansatz denominator not fixed");
  std::vector<RatFunc> w{RatFunc(e.num(), d0)};
  for (long rho = 1; rho * v->m <= max_order; ++rho) {
    w.push_back(w.back().shifted(*v));
    std::map<std::pair<unsigned, unsigned>, std::vector<RatFunc>> rows;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (auto& [key, c] : yz_coefficients(w[i])) {
        auto& row = rows[key];
        row.resize(w.size());
        row[i] = c;
      }
    Matrix<RatFunc> a;
    for (auto& [key, row] : rows) a.add_row(row);
    auto kernel = a.nullspace();
    if (kernel.empty()) continue;
    std::vector<RatFunc> coeffs(static_cast<std::size_t>(rho * v->m) + 1);
    for (std::size_t i = 0; i < w.size(); ++i) coeffs[i * static_cast<std::size_t>(v->m)] = kernel[0][i];
    return OrePoly(coeffs).monic();
  }
  return std::nullopt;
}

TelescoperDecision decide(const RatFunc& f, bool construct, int max_order, std::string* reason,
                          const std::vector<MultiPoly>* den_factors) {
  TelescoperDecision out;
  out.exists = true;
  if (f.is_zero()) {
    out.tag = CaseTag::Summable;
    if (construct) out.witness = TelescoperWitness{OrePoly(1), RatFunc(), RatFunc()};
    return out;
  }
  if (!f.contains(X)) {
    out.tag = CaseTag::XFree;
    if (construct) out.witness = TelescoperWitness{OrePoly::shift() - OrePoly(1), RatFunc(), RatFunc()};
    return out;
  }
  OrbitForm form = to_orbit_form(f, den_factors);
  if (form.groups.empty()) {
    out.tag = CaseTag::Summable;
    if (construct) out.witness = TelescoperWitness{OrePoly(1), form.g, form.h};
    return out;
  }

  std::vector<FractionAnalysis> parts;
  std::set<CaseTag> tags;
  for (auto& grp : form.groups)
    for (auto& t : grp.terms) {
      MultiPoly den = grp.denominator(t);
      FractionAnalysis a = analyze(t.b, den, t.j);
      out.notes.push_back("(" + den.to_string() + ")^" + std::to_string(t.j) + ": " + to_string(a.tag));
      if (!a.exists && out.exists) {
        out.exists = false;
        out.tag = a.tag;
      }
      tags.insert(a.tag);
      parts.push_back(std::move(a));
    }
  if (!out.exists) {
    if (reason) *reason = "nonexistent";
    return out;
  }
  out.tag = merge_tags(tags);
  if (!construct) return out;

  std::vector<OrePoly> ops;
  for (auto& a : parts) {
    if (a.exists_part.is_zero()) continue;
    auto l = numerator_ansatz(a.exists_part, a.fixed, max_order);
    if (!l) {
      if (reason) *reason = "bound exceeded";
      return out;
    }
    ops.push_back(*l);
  }
  OrePoly L = ops.empty() ? OrePoly(1) : lclm(ops);
  if (L.order() > max_order) {
    if (reason) *reason = "bound exceeded";
    return out;
  }
  RatFunc g = L.apply(form.g), h = L.apply(form.h);
  for (auto& grp : form.groups) {
    std::map<int, RatFunc> layers;
    for (auto& t : grp.terms) layers[t.j] += grp.term_value(t);
    for (auto& [j, r] : layers) {
      RatFunc image = L.apply(r);
      std::vector<MultiPoly> hint = image_factors(grp, L.order(), image.den());
      SummabilityResult s = is_summable(image, Base::QX, hint.empty() ? nullptr : &hint);
      if (!s.summable) throw std::logic_error("constructed operator is not a telescoper");
      g += s.certificate->first;
      h += s.certificate->second;
    }
  }
  if (!verify(L, f, g, h)) throw std::logic_error("telescoper certificate failed to verify");
  out.witness = TelescoperWitness{L, g, h};
  return out;
}

}  // namespace

MultiPoly OrbitGroup::denominator(const OrbitTerm& t) const { return x_shifted(d, t.offset); }

RatFunc OrbitGroup::term_value(const OrbitTerm& t) const {
  return t.b / RatFunc(denominator(t).pow(static_cast<unsigned>(t.j)));
}

RatFunc OrbitForm::residue() const {
  RatFunc r;
  for (auto& grp : groups)
    for (auto& t : grp.terms) r += grp.term_value(t);
  return r;
}

OrbitForm to_orbit_form(const RatFunc& f, const std::vector<MultiPoly>* den_factors) {
  AdditiveDecomposition ad = additive_decomposition(f, Base::QX, den_factors);
  OrbitForm out{ad.g, ad.h, {}};
  struct Member {
    ShiftVector v;
    const SimpleFraction* s;
  };
  std::vector<std::pair<MultiPoly, std::vector<Member>>> groups;
  for (auto& s : ad.residue) {
    bool placed = false;
    for (auto& [d0, members] : groups)
      if (auto v = find_shift(d0, s.d, 7)) {
        members.push_back({*v, &s});
        placed = true;
        break;
      }
    if (!placed) groups.push_back({s.d, {Member{ShiftVector{}, &s}}});
  }
  for (auto& [d0, members] : groups) {
    auto period = minimal_x_period(stabilizer_lattice(d0));
    long base = 0;
    if (!period) {
      base = members.front().v.m;
      for (auto& mb : members) base = std::min(base, mb.v.m);
    }
    OrbitGroup grp{x_shifted(d0, base), {}};
    std::map<std::pair<long, int>, RatFunc> merged;
    for (auto& mb : members) {
      ShiftVector u = mb.v - ShiftVector{base, 0, 0};
      if (period) u = u - floor_div(u.m, period->m) * *period;
      RatFunc b = mb.s->a.shifted(ShiftVector{0, -u.n, -u.k});
      RatFunc w0 = b / RatFunc(x_shifted(grp.d, u.m).pow(static_cast<unsigned>(mb.s->j)));
      auto [cg, ch] = shift_difference_certificate(w0, u.n, u.k);
      out.g += cg;
      out.h += ch;
      merged[{u.m, mb.s->j}] += b;
    }
    for (auto& [key, b] : merged)
      if (!b.is_zero()) grp.terms.push_back(OrbitTerm{key.first, key.second, b});
    if (!grp.terms.empty()) out.groups.push_back(std::move(grp));
  }
  return out;
}

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Summable: return "Summable";
    case CaseTag::XFree: return "XFree";
    case CaseTag::NecessaryII: return "NecessaryII";
    case CaseTag::ProperI: return "ProperI";
    case CaseTag::CR1Summable: return "CR1-Summable";
    case CaseTag::CR1NotSummable: return "CR1-NotSummable";
    case CaseTag::Suff1Zero: return "Suff1-Zero";
    case CaseTag::Suff1NonZero: return "Suff1-NonZero";
    case CaseTag::Suff2Summable: return "Suff2-Summable";
    case CaseTag::Suff2NotSummable: return "Suff2-NotSummable";
    case CaseTag::Combined: return "Combined";
  }
  return "?";
}

TelescoperDecision exists_telescoper(const RatFunc& f, const std::vector<MultiPoly>* den_factors) {
  return decide(f, false, 0, nullptr, den_factors);
}

TelescoperConstruction construct_telescoper(const RatFunc& f, int max_order,
                                            const std::vector<MultiPoly>* den_factors) {
  TelescoperConstruction out;
  out.decision = decide(f, true, max_order, &out.reason, den_factors);
  return out;
}

bool verify(const OrePoly& L, const RatFunc& f, const RatFunc& g, const RatFunc& h) {
  return check_certificate(L.apply(f), g, h);
}

}  // namespace trisum
