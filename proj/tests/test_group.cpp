#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quandle/catalog.hpp"

using namespace qf;

TEST(FiniteGroup, RejectsNonGroupTables) {
  EXPECT_THROW(FiniteGroup("bad", 2, {0, 1, 1, 1}), StructuralError);     // not Latin
  EXPECT_THROW(FiniteGroup("bad", 2, {1, 0, 0, 1}), StructuralError);     // identity not at 0
  EXPECT_THROW(FiniteGroup("bad", 2, {0, 1, 1, 2}), StructuralError);     // out of range
  // Latin square with identity 0 that is not associative
  EXPECT_THROW(FiniteGroup("bad", 5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}),
               StructuralError);
}

TEST(FiniteGroup, CyclicTableIsAddition) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const FiniteGroup g = cyclic_group(n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) EXPECT_EQ(g.mul(a, b), (a + b) % n);
  }
}

TEST(FiniteGroup, DihedralTableMatchesRelations) {
  for (long long n = 3; n <= 8; ++n) {
    const FiniteGroup g = dihedral_group(n);
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y) {
        const auto z = oracle::dihedral_mul({x / n, x % n}, {y / n, y % n}, n);
        EXPECT_EQ(g.mul(x, y), z.first * n + z.second);
      }
  }
}

TEST(FiniteGroup, ElementOrdersAndPowers) {
  const FiniteGroup q = quaternion_group();
  EXPECT_EQ(q.order_profile(), (std::vector<std::size_t>{1, 2, 4, 4, 4, 4, 4, 4}));
  EXPECT_FALSE(q.is_abelian());
  for (Elem x = 0; x < 8; ++x) EXPECT_EQ(power(q, x, static_cast<long long>(q.order_of(x))), 0u);
  EXPECT_EQ(power(q, 2, -1), q.inv(2));
}

TEST(Subgroup, ClosureCenterNormality) {
  const FiniteGroup d4 = dihedral_group(4);
  const Subgroup z = center(d4);
  EXPECT_EQ(std::vector<Elem>(z.members().begin(), z.members().end()), (std::vector<Elem>{0, 2}));
  const Subgroup refl = generated_subgroup(d4, {4});
  EXPECT_EQ(refl.size(), 2u);
  EXPECT_FALSE(is_normal(d4, refl));
  EXPECT_TRUE(is_normal(d4, generated_subgroup(d4, {1})));
  EXPECT_EQ(normal_closure(d4, 4).size(), 4u);
  EXPECT_THROW(Subgroup(d4, {0, 4, 5}), ContractViolation);
}

TEST(Subgroup, Simplicity) {
  EXPECT_TRUE(is_simple(cyclic_group(7)));
  EXPECT_FALSE(is_simple(cyclic_group(6)));
  EXPECT_FALSE(is_simple(alternating_group(4)));
  EXPECT_TRUE(is_simple(alternating_group(5)));
  EXPECT_FALSE(is_simple(cyclic_group(1)));
}

TEST(GroupMap, RejectsNonHomomorphisms) {
  const FiniteGroup c4 = cyclic_group(4);
  EXPECT_THROW(GroupMap(c4, c4, {0, 2, 1, 3}), ContractViolation);
  EXPECT_THROW(GroupMap(c4, c4, {1, 2, 3, 0}), ContractViolation);
  EXPECT_THROW(GroupMap(c4, c4, {0, 1, 2, 4}), StructuralError);
  EXPECT_NO_THROW(GroupMap(c4, c4, {0, 3, 2, 1}));
}

TEST(GroupMap, CompositionInverseOrder) {
  const FiniteGroup c7 = cyclic_group(7);
  const GroupMap m3(c7, c7, {0, 3, 6, 2, 5, 1, 4});
  EXPECT_EQ(m3.order(), oracle::multiplicative_order(3, 7));
  EXPECT_TRUE(m3.after(m3.inverse()).is_identity());
  EXPECT_EQ(m3.power(2).after(m3), m3.power(3));
  const FiniteGroup d4 = dihedral_group(4);
  const GroupMap inner = inner_automorphism(d4, 4);
  for (Elem x = 0; x < 8; ++x) EXPECT_EQ(inner(x), d4.mul(d4.mul(4, x), d4.inv(4)));
}

TEST(Automorphisms, CountsMatchClosedForms) {
  for (long long n = 1; n <= 16; ++n)
    EXPECT_EQ(static_cast<long long>(automorphism_group(cyclic_group(n)).size()), oracle::totient(n)) << n;
  for (long long n = 3; n <= 8; ++n)
    EXPECT_EQ(static_cast<long long>(automorphism_group(dihedral_group(n)).size()), n * oracle::totient(n)) << n;
  EXPECT_EQ(automorphism_group(quaternion_group()).size(), 24u);
  EXPECT_EQ(automorphism_group(build_group("C2xC2xC2")).size(), 7u * 6u * 4u);  // |GL(3,2)|
  EXPECT_EQ(automorphism_group(alternating_group(4)).size(), 24u);
  EXPECT_EQ(automorphism_group(symmetric_group(3)).size(), 6u);
}

TEST(Automorphisms, CapacityBoundIsOnGroupOrder) {
  EXPECT_THROW(automorphism_group(build_group("C2xC2xC2xC2"), 8), CapacityError);
}

TEST(Automorphisms, ConjugacyClassesPartitionAut) {
  for (const char* name : {"C8", "D4", "Q8", "C2xC2xC2", "C4xC2", "A4", "Dic3", "C6xC2", "D6"}) {
    const auto ac = automorphism_conjugacy_classes(build_group(name));
    std::size_t total = 0;
    for (const auto& c : ac.classes) total += c.size;
    EXPECT_EQ(total, ac.automorphisms.size()) << name;
    // class_of agrees with direct conjugation
    for (std::size_t i = 0; i < ac.automorphisms.size(); ++i)
      for (const auto& tau : ac.automorphisms)
        EXPECT_EQ(ac.class_index(ac.automorphisms[i].conjugated_by(tau)), ac.class_of[i]) << name;
  }
  // GL(3,2) has six classes; Aut(D4) ~ D4 and Aut(Q8) ~ S4 have five
  EXPECT_EQ(automorphism_conjugacy_classes(build_group("C2xC2xC2")).classes.size(), 6u);
  EXPECT_EQ(automorphism_conjugacy_classes(build_group("D4")).classes.size(), 5u);
  EXPECT_EQ(automorphism_conjugacy_classes(build_group("Q8")).classes.size(), 5u);
}

TEST(Isomorphism, SearchFindsAndRefutes) {
  EXPECT_FALSE(groups_isomorphic(cyclic_group(8), build_group("C4xC2")));
  EXPECT_FALSE(groups_isomorphic(dihedral_group(4), quaternion_group()));
  const auto h = groups_isomorphic(cyclic_group(6), build_group("C3xC2"));
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->is_bijective());
  EXPECT_EQ(all_isomorphisms(dihedral_group(3), symmetric_group(3)).size(), 6u);
}

TEST(FixedSubgroup, MatchesDirectCount) {
  const FiniteGroup c12 = cyclic_group(12);
  for (long long a : {1, 5, 7, 11}) {
    std::vector<Elem> im(12);
    for (Elem x = 0; x < 12; ++x) im[x] = static_cast<Elem>((a * x) % 12);
    const GroupMap m(c12, c12, im);
    EXPECT_EQ(static_cast<long long>(fixed_subgroup(m).size()), std::gcd(12LL, oracle::mod(a - 1, 12)));
  }
}
