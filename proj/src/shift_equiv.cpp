#include "trisum/shift_equiv.hpp"

#include <map>
#include <stdexcept>

#include "trisum/linalg.hpp"

namespace trisum {

namespace {

using RVec = std::array<Rational, 3>;

IVec integer_row(const std::vector<Rational>& r) {
  Integer l = 1;
  for (auto& c : r) l = lcm(l, Integer(c.get_den()));
  IVec out;
  for (auto& c : r) out.push_back(Integer(c * l));
  return out;
}

void add_derivative_rows(const MultiPoly& p, std::vector<IVec>& rows) {
  std::map<std::uint64_t, std::vector<Rational>> coef;
  for (int v = 0; v < 3; ++v) {
    MultiPoly d = p.derivative(v);
    for (auto& [m, c] : d.terms()) {
      auto& r = coef[m.key()];
      r.resize(3);
      r[v] = c;
    }
  }
  for (auto& [k, r] : coef) rows.push_back(integer_row(r));
}

MultiPoly directional(const MultiPoly& p, const RVec& s) {
  MultiPoly out;
  for (int v = 0; v < 3; ++v)
    if (s[v] != 0) out += p.derivative(v) * s[v];
  return out;
}

// Rows of the linear system sum_i c_i cols[i] = rhs, one per monomial.
void coefficient_system(const std::vector<MultiPoly>& cols, const MultiPoly& rhs, Matrix<Rational>* a,
                        std::vector<Rational>* b) {
  std::map<std::uint64_t, std::size_t> index;
  auto idx = [&](Monomial m) {
    auto it = index.find(m.key());
    if (it != index.end()) return it->second;
    std::size_t i = index.size();
    index.emplace(m.key(), i);
    return i;
  };
  for (auto& c : cols)
    for (auto& t : c.terms()) idx(t.first);
  for (auto& t : rhs.terms()) idx(t.first);
  *a = Matrix<Rational>(index.size(), cols.size());
  b->assign(index.size(), Rational(0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& [m, c] : cols[j].terms()) (*a)(index[m.key()], j) = c;
  for (auto& [m, c] : rhs.terms()) (*b)[index[m.key()]] = c;
}

}  // namespace

Lattice stabilizer_lattice(const MultiPoly& p) { return joint_stabilizer({p}); }

Lattice joint_stabilizer(const std::vector<MultiPoly>& ps) {
  std::vector<IVec> rows;
  for (auto& p : ps) add_derivative_rows(p, rows);
  return Lattice(integer_kernel(rows, 3));
}

std::optional<ShiftVector> find_shift(const MultiPoly& p, const MultiPoly& q, unsigned axes) {
  if (p == q) return ShiftVector{};
  int deg = p.total_degree();
  if (p.is_zero() || q.is_zero() || q.total_degree() != deg) return std::nullopt;
  if (p.homogeneous_part(7, deg) != q.homogeneous_part(7, deg)) return std::nullopt;

  // Invariant: r = p(X + v) agrees with q in all slices of degree >= j, and
  // every s in span(free) kills those slices under s . grad.
  RVec v{0, 0, 0};
  std::vector<RVec> free;
  for (int i = 0; i < 3; ++i)
    if (axes >> i & 1) {
      RVec e{0, 0, 0};
      e[i] = 1;
      free.push_back(e);
    }
  MultiPoly r = p;
  for (int j = deg; j >= 1; --j) {
    MultiPoly rhs = q.homogeneous_part(7, j - 1) - r.homogeneous_part(7, j - 1);
    if (free.empty()) {
      if (!rhs.is_zero()) return std::nullopt;
      continue;
    }
    MultiPoly top = r.homogeneous_part(7, j);
    std::vector<MultiPoly> cols;
    for (auto& f : free) cols.push_back(directional(top, f));
    Matrix<Rational> a;
    std::vector<Rational> b;
    coefficient_system(cols, rhs, &a, &b);
    auto c = a.solve(b);
    if (!c) return std::nullopt;
    std::vector<RVec> next;
    for (auto& k : a.nullspace()) {
      RVec w{0, 0, 0};
      for (std::size_t i = 0; i < free.size(); ++i)
        for (int t = 0; t < 3; ++t) w[t] += k[i] * free[i][t];
      next.push_back(w);
    }
    bool moved = false;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((*c)[i] != 0) {
        moved = true;
        for (int t = 0; t < 3; ++t) v[t] += (*c)[i] * free[i][t];
      }
    if (moved) r = p.shifted(v);
    free = std::move(next);
  }
  if (r != q) return std::nullopt;

  // Integer points of v + span(free): w with N w = N v for N spanning the
  // orthogonal complement of span(free).
  std::vector<IVec> n_rows;
  IVec rhs;
  Matrix<Rational> fm;
  for (auto& f : free) fm.add_row({f[0], f[1], f[2]});
  std::vector<std::vector<Rational>> perp;
  if (free.empty()) {
    perp = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  } else {
    perp = fm.nullspace();
  }
  for (auto& row : perp) {
    Rational dot = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
    std::vector<Rational> ext = row;
    ext.push_back(dot);
    IVec scaled = integer_row(ext);
    rhs.push_back(scaled.back());
    scaled.pop_back();
    n_rows.push_back(scaled);
  }
  std::optional<IVec> w = n_rows.empty() ? IVec{0, 0, 0} : solve_integer(n_rows, rhs, 3);
  if (!w) return std::nullopt;
  ShiftVector best = stabilizer_lattice(p).restricted(axes).reduce(to_shift(*w));
  if (p.shifted(best) != q) throw std::logic_error("find_shift: candidate failed verification");
  return best;
}

std::optional<ShiftVector> minimal_x_period(const Lattice& stab) { return stab.min_positive(0); }

std::optional<ShiftVector> minimal_yz_period(const Lattice& stab) {
  return stab.restricted(6).min_positive(1);
}

}  // namespace trisum
