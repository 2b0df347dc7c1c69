#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quandle/catalog.hpp"
#include "quandle/iso.hpp"
#include "quandle/quandle.hpp"

using namespace qf;

TEST(Axioms, ReportsEachKindOfViolation) {
  using A = AxiomViolation::Axiom;
  // s_0(0) = 1 breaks Q1
  auto v = check_axioms(2, {1, 0, 0, 1});
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().axiom, A::Q1);
  // a repeated row entry breaks Q2
  v = check_axioms(2, {0, 0, 1, 1});
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const auto& x) { return x.axiom == A::Q2; }));
  // on 3 points: s_0 = (1 2), s_1 = id, s_2 = (0 1) breaks Q3 only
  v = check_axioms(3, {0, 2, 1, 0, 1, 2, 1, 0, 2});
  ASSERT_FALSE(v.empty());
  for (const auto& x : v) EXPECT_EQ(x.axiom, A::Q3);
  EXPECT_THROW(Quandle(3, {0, 2, 1, 0, 1, 2, 1, 0, 2}), StructuralError);
  EXPECT_TRUE(check_axioms(3, {0, 2, 1, 0, 1, 2, 0, 1, 2}).empty());
  EXPECT_THROW(check_axioms(2, {0, 1, 2}), StructuralError);
}

TEST(GeneralAlexander, SymmetryFormula) {
  for (const char* name : {"D4", "Q8", "A4", "Dic3"}) {
    const FiniteGroup g = build_group(name);
    for (const auto& psi : automorphism_group(g)) {
      const Quandle q = general_alexander(psi);
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) EXPECT_EQ(q.s(x, y), g.mul(x, psi(g.mul(g.inv(x), y))));
      for (Elem y = 0; y < g.order(); ++y) EXPECT_EQ(q.s(0, y), psi(y));  // s_e = psi
      EXPECT_EQ(q.op(1, 2), q.s(2, 1));
    }
  }
}

TEST(GeneralAlexander, LinearCaseMatchesAffineFormula) {
  for (long long n = 2; n <= 12; ++n)
    for (long long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const FiniteGroup c = cyclic_group(n);
      const Quandle q = general_alexander(named_automorphism(c, "mul:" + std::to_string(a)));
      EXPECT_EQ(q.sym(), oracle::linear_alexander_table(n, a)) << n << " " << a;
    }
}

TEST(GeneralAlexander, RequiresAutomorphism) {
  const FiniteGroup c4 = cyclic_group(4);
  EXPECT_THROW(general_alexander(GroupMap(c4, c4, {0, 2, 0, 2})), ContractViolation);
}

TEST(InnerGroup, LinearQuandleOnPrimeOrder) {
  // Q(C_p, a) with a != 1: Inn is the affine group {y -> a^k y + c}, of size p * ord(a)
  for (long long p : {3, 5, 7, 11})
    for (long long a = 2; a < p; ++a) {
      const Quandle q(p, oracle::linear_alexander_table(p, a));
      EXPECT_EQ(static_cast<long long>(inner_group(q).size()), p * static_cast<long long>(oracle::multiplicative_order(a, p)));
      EXPECT_TRUE(is_connected(q));
      EXPECT_EQ(quandle_order(q), oracle::multiplicative_order(a, p));
    }
}

TEST(InnerGroup, CapacityBound) {
  const Quandle q = general_alexander(named_automorphism(build_group("C2xC2xC2"), "M5"));
  EXPECT_THROW(inner_group(q, 1), CapacityError);
}

TEST(PermGroup, OrbitsAndMembership) {
  const PermGroup g(4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.orbit(0), (std::vector<Elem>{0, 1}));
  EXPECT_TRUE(g.contains({1, 0, 3, 2}));
  EXPECT_FALSE(g.contains({2, 1, 0, 3}));
  EXPECT_TRUE(groups_isomorphic(g.as_group("V"), build_group("C2xC2")).has_value());
}

TEST(Subquandle, ClosureAndWitness) {
  const Quandle q(6, oracle::linear_alexander_table(6, 5));  // dihedral quandle of order 6
  const Quandle evens = subquandle(q, {0, 2, 4});
  EXPECT_EQ(evens.size(), 3u);
  try {
    subquandle(q, {0, 1});
    FAIL() << "expected a closure violation";
  } catch (const ContractViolation& e) {
    EXPECT_NE(std::string(e.what()).find("escapes"), std::string::npos);
  }
}

TEST(QuandleIsomorphism, CheckerRejectsNonBijections) {
  const Quandle q(3, oracle::linear_alexander_table(3, 2));
  EXPECT_TRUE(is_quandle_isomorphism(q, q, {0, 1, 2}));
  EXPECT_TRUE(is_quandle_isomorphism(q, q, {1, 2, 0}));  // translations are automorphisms
  EXPECT_FALSE(is_quandle_isomorphism(q, q, {0, 0, 1}));
  EXPECT_FALSE(is_quandle_isomorphism(q, q, {0, 1}));
}

TEST(QuandleOrder, RejectsInhomogeneousQuandles) {
  // trivial quandle on {0,1} glued with a transposition on {2,3}: s_x for x in {0,1} swaps 2,3
  const Quandle q(4, {0, 1, 3, 2, 0, 1, 3, 2, 0, 1, 2, 3, 0, 1, 2, 3});
  EXPECT_THROW(quandle_order(q), ContractViolation);
  EXPECT_FALSE(is_connected(q));
}

TEST(BruteForce, AgreesWithExhaustiveSearchUpToOrderSix) {
  std::vector<Quandle> qs;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : groups_of_order(n))
      for (const auto& c : automorphism_conjugacy_classes(g).classes) qs.push_back(general_alexander(c.representative));
  for (const auto& a : qs)
    for (const auto& b : qs) {
      if (a.size() != b.size()) continue;
      const IsoVerdict v = brute_force_iso(a, b);
      EXPECT_EQ(v.isomorphic(), oracle::naive_isomorphic(a, b, true));
      if (v.witness) {
        EXPECT_TRUE(is_quandle_isomorphism(a, b, *v.witness));
      }
    }
}

TEST(BruteForce, HandlesQuandlesWithoutProvenance) {
  // a trivial point glued to a 3-point dihedral quandle, relabelled so the trivial point is not 0
  const Quandle t(4, {0, 1, 2, 3, 0, 1, 3, 2, 0, 3, 2, 1, 0, 2, 1, 3});
  const std::vector<Elem> relabel{2, 0, 3, 1};
  std::vector<Elem> sym(16);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) sym[relabel[x] * 4 + relabel[y]] = relabel[t.s(x, y)];
  const Quandle u(4, sym);
  const IsoVerdict v = brute_force_iso(t, u);
  ASSERT_TRUE(v.isomorphic());
  EXPECT_TRUE(is_quandle_isomorphism(t, u, *v.witness));
  EXPECT_TRUE(oracle::naive_isomorphic(t, u, false));
  const Quandle trivial(4, {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3});
  EXPECT_FALSE(brute_force_iso(t, trivial).isomorphic());
  EXPECT_THROW(brute_force_iso(t, u, 3), CapacityError);
}
