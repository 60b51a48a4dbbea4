#include <gtest/gtest.h>

#include "gen.hpp"
#include "trisum/parse.hpp"
#include "trisum/shift_equiv.hpp"

using namespace trisum;
using trisum::testing::Gen;

namespace {

MultiPoly P(const char* s) { return parse_expr(s).num(); }

Lattice span(std::vector<ShiftVector> vs) {
  std::vector<IVec> g;
  for (auto& v : vs) g.push_back(to_ivec(v));
  return Lattice(g);
}

// Brute-force search of shifts in a box, for cross-checking.
std::optional<ShiftVector> box_search(const MultiPoly& p, const MultiPoly& q, unsigned axes, long r) {
  for (long m = -r; m <= r; ++m)
    for (long n = -r; n <= r; ++n)
      for (long k = -r; k <= r; ++k) {
        ShiftVector s{m, n, k};
        if ((m && !(axes & 1)) || (n && !(axes & 2)) || (k && !(axes & 4))) continue;
        if (p.shifted(s) == q) return s;
      }
  return std::nullopt;
}

}  // namespace

TEST(Lattice, HermiteAndKernel) {
  auto k = integer_kernel({{2, 4, 6}}, 3);
  Lattice l(k);
  EXPECT_TRUE(l.contains({1, 1, -1}));
  EXPECT_TRUE(l.contains({3, 0, -1}));
  EXPECT_FALSE(l.contains({1, 0, 0}));
  EXPECT_EQ(l.rank(), 2);
  auto w = solve_integer({{2, 4, 6}}, {10}, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(2 * (*w)[0] + 4 * (*w)[1] + 6 * (*w)[2], 10);
  EXPECT_FALSE(solve_integer({{2, 4, 6}}, {5}, 3));
  EXPECT_EQ(span({{2, 0, 0}, {0, 3, 0}}).reduce({5, 5, 1}), (ShiftVector{1, -1, 1}));
  EXPECT_EQ(span({{2, 0, 0}}).reduce({1, 0, 0}), (ShiftVector{1, 0, 0}));
}

TEST(Stabilizer, Examples) {
  EXPECT_EQ(stabilizer_lattice(P("x+y+z^2")), span({{1, -1, 0}}));
  EXPECT_EQ(stabilizer_lattice(P("x+y+z")), span({{1, -1, 0}, {0, 1, -1}}));
  EXPECT_EQ(stabilizer_lattice(P("y^2+z^2")), span({{1, 0, 0}}));
  EXPECT_EQ(stabilizer_lattice(P("(x+y)^2+z^2")), span({{1, -1, 0}}));
  EXPECT_EQ(stabilizer_lattice(P("2*x+3*y")), span({{3, -2, 0}, {0, 0, 1}}));
}

TEST(Stabilizer, Queries) {
  Lattice s = stabilizer_lattice(P("x+y+z^2"));
  EXPECT_EQ(minimal_x_period(s), (ShiftVector{1, -1, 0}));
  EXPECT_FALSE(minimal_yz_period(s));
  s = stabilizer_lattice(P("x+y+z"));
  // (1,-1,0) also qualifies; (1,0,-1) is smaller in |n|.
  EXPECT_EQ(minimal_x_period(s), (ShiftVector{1, 0, -1}));
  EXPECT_EQ(minimal_yz_period(s), (ShiftVector{0, 1, -1}));
  s = stabilizer_lattice(P("(2*y+3*z)^2+x^2"));
  EXPECT_FALSE(minimal_x_period(s));
  EXPECT_EQ(minimal_yz_period(s), (ShiftVector{0, 3, -2}));
  EXPECT_FALSE(minimal_x_period(stabilizer_lattice(P("x*y+z"))));
}

TEST(Stabilizer, LatticeProperty) {
  Gen g(21);
  int nontrivial = 0;
  for (int i = 0; i < 220; ++i) {
    MultiPoly p;
    if (i % 2 == 0) {
      // Built from linear forms so that the stabilizer is often nontrivial.
      MultiPoly l1 = g.poly(7, 1, 3, 3), l2 = g.poly(7, 1, 3, 3);
      p = l1.pow(static_cast<unsigned>(g.uniform(1, 3))) + l2 * g.poly(7, 1, 2, 2) + g.poly(0, 0, 1);
    } else {
      p = g.poly(7, 4, 5);
    }
    if (p.is_constant()) continue;
    Lattice s = stabilizer_lattice(p);
    if (s.rank() > 0) ++nontrivial;
    for (int t = 0; t < 6; ++t) {
      ShiftVector v;
      for (auto& b : s.basis()) v = v + g.uniform(-4, 4) * b;
      EXPECT_EQ(p.shifted(v), p) << p.to_string();
      ShiftVector w = g.shift(4);
      EXPECT_EQ(p.shifted(w) == p, s.contains(w)) << p.to_string() << " " << to_string(w);
    }
    EXPECT_EQ(stabilizer_lattice(p.shifted(g.shift(3))), s);
  }
  EXPECT_GT(nontrivial, 50);
}

TEST(FindShift, Examples) {
  MultiPoly p = P("y^2+x+2*z"), q = P("y^2+x-4*y+2*z+7");
  EXPECT_EQ(find_shift(p, q, 7), (ShiftVector{1, -2, 1}));
  EXPECT_FALSE(find_shift(p, q, 6));
  EXPECT_EQ(find_shift(p, p, 6), ShiftVector{});
  // Solution coset (1,-2,1) + Z(2,0,-1): minimal representative.
  EXPECT_EQ(find_shift(P("x+2*z"), P("x+2*z+5"), 7), (ShiftVector{1, 0, 2}));
  EXPECT_FALSE(find_shift(P("x^2+y"), P("x^2+y+1/2"), 7));
  EXPECT_EQ(find_shift(P("x+y+z^2"), P("x+y+z^2+3"), 6), (ShiftVector{0, 3, 0}));
}

TEST(FindShift, RoundTripAndSymmetry) {
  Gen g(22);
  for (int i = 0; i < 220; ++i) {
    MultiPoly p = i % 3 == 0 ? g.poly(7, 2, 3) + g.poly(7, 1, 3).pow(3) : g.poly(7, 4, 5);
    if (p.is_constant()) continue;
    unsigned axes = static_cast<unsigned>(g.uniform(1, 7));
    ShiftVector s = g.shift(3, axes);
    MultiPoly q = p.shifted(s);
    auto v = find_shift(p, q, axes);
    ASSERT_TRUE(v) << p.to_string() << " " << to_string(s);
    EXPECT_EQ(p.shifted(*v), q);
    auto w = find_shift(q, p, axes);
    ASSERT_TRUE(w);
    EXPECT_EQ(q.shifted(*w), p);
  }
}

TEST(FindShift, AgreesWithBoxSearch) {
  Gen g(23);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = g.poly(7, 3, 4, 3) + g.poly(7, 1, 2, 2).pow(2);
    if (p.is_constant()) continue;
    unsigned axes = static_cast<unsigned>(g.uniform(1, 7));
    MultiPoly q = p.shifted(g.shift(2));
    if (g.coin()) q += MultiPoly(g.poly(7, 1, 1, 1));
    auto brute = box_search(p, q, axes, 2);
    auto v = find_shift(p, q, axes);
    if (brute) ASSERT_TRUE(v) << p.to_string() << " -> " << q.to_string();
    if (v) EXPECT_EQ(p.shifted(*v), q);
  }
}
