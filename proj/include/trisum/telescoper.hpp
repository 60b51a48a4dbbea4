#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisum/ore.hpp"
#include "trisum/summability.hpp"

namespace trisum {

/// b / (sigma_x^offset(d))^j inside an orbit group.
struct OrbitTerm {
  long offset = 0;
  int j = 1;
  RatFunc b;
};

struct OrbitGroup {
  MultiPoly d;  // irreducible representative
  std::vector<OrbitTerm> terms;

  /// sigma_x^offset(d).
  MultiPoly denominator(const OrbitTerm& t) const;
  RatFunc term_value(const OrbitTerm& t) const;
};

/// f = delta_y(g) + delta_z(h) + sum of all group terms. Group representatives
/// lie in distinct x, y, z shift orbits; the offsets of one group give
/// denominators that are pairwise inequivalent under y, z shifts.
struct OrbitForm {
  RatFunc g, h;
  std::vector<OrbitGroup> groups;

  RatFunc residue() const;
};

/// `den_factors`, when given, replaces factorization of the denominator of f.
OrbitForm to_orbit_form(const RatFunc& f, const std::vector<MultiPoly>* den_factors = nullptr);

enum class CaseTag {
  Summable,
  XFree,
  NecessaryII,
  ProperI,
  CR1Summable,
  CR1NotSummable,
  Suff1Zero,
  Suff1NonZero,
  Suff2Summable,
  Suff2NotSummable,
  Combined,
};

/// "Summable", "CR1-NotSummable", ...
const char* to_string(CaseTag t);

struct TelescoperWitness {
  OrePoly L;
  RatFunc g, h;
};

struct TelescoperDecision {
  bool exists = false;
  CaseTag tag = CaseTag::Summable;
  std::optional<TelescoperWitness> witness;
  std::vector<std::string> notes;  // one line per residue fraction
};

TelescoperDecision exists_telescoper(const RatFunc& f,
                                     const std::vector<MultiPoly>* den_factors = nullptr);

struct TelescoperConstruction {
  TelescoperDecision decision;  // witness set on success
  std::string reason;           // "nonexistent" or "bound exceeded" without a witness
};

/// Builds and verifies a telescoper of order at most max_order.
TelescoperConstruction construct_telescoper(const RatFunc& f, int max_order = 6,
                                           const std::vector<MultiPoly>* den_factors = nullptr);

/// True iff L(f) = delta_y(g) + delta_z(h).
bool verify(const OrePoly& L, const RatFunc& f, const RatFunc& g, const RatFunc& h);

}  // namespace trisum
