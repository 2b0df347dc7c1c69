#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quandle/catalog.hpp"

using namespace qf;

TEST(Catalog, NumberOfTypesPerOrder) {
  // number of groups of order n up to isomorphism
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  for (std::size_t n = 1; n <= 16; ++n) EXPECT_EQ(group_names_of_order(n).size(), expected[n - 1]) << n;
}

TEST(Catalog, TypesArePairwiseDistinctAndIdentified) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto gs = groups_of_order(n);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      EXPECT_EQ(gs[i].order(), n);
      EXPECT_EQ(identify_group(gs[i]), gs[i].name());
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        EXPECT_FALSE(groups_isomorphic(gs[i], gs[j])) << gs[i].name() << " " << gs[j].name();
    }
  }
}

TEST(Catalog, UnknownNamesAndLimits) {
  EXPECT_THROW(build_group("Z7"), LookupError);
  EXPECT_THROW(group_names_of_order(17), CapacityError);
  EXPECT_THROW(symmetric_group(6), CapacityError);
  EXPECT_EQ(build_group("S4").order(), 24u);
  EXPECT_EQ(build_group("SL23").order(), 24u);
  EXPECT_EQ(center(build_group("SL23")).size(), 2u);
}

TEST(Catalog, SemidirectProductsAreNamedTypes) {
  EXPECT_EQ(identify_group(build_group("Dic3")), "Dic3");
  EXPECT_TRUE(groups_isomorphic(build_group("D3"), build_group("S3")));
  EXPECT_TRUE(detail::has_automorphism_of_order(build_group("SD16"), 3));
  EXPECT_TRUE(detail::has_automorphism_of_order(build_group("C2xQ8"), 3));
  EXPECT_FALSE(detail::has_automorphism_of_order(build_group("C2xD4"), 3));
}

TEST(NamedAutomorphism, GrammarAndErrors) {
  const FiniteGroup c4c2 = build_group("C4xC2");
  EXPECT_THROW(named_automorphism(c4c2, "nonsense"), LookupError);
  EXPECT_THROW(named_automorphism(c4c2, "mat:1,0;0,0"), ContractViolation);
  EXPECT_THROW(named_automorphism(build_group("C6"), "mul:2"), ContractViolation);
  EXPECT_THROW(named_automorphism(build_group("C6"), "phi:1,0"), LookupError);
  // psi_sigma (i,j) -> (i+2j, i+j), element (i,j) at index 2i + j
  const GroupMap s = named_automorphism(c4c2, "psi_sigma");
  for (Elem i = 0; i < 4; ++i)
    for (Elem j = 0; j < 2; ++j) EXPECT_EQ(s(2 * i + j), 2 * ((i + 2 * j) % 4) + (i + j) % 2);
  EXPECT_EQ(s.order(), 4u);
  EXPECT_EQ(named_automorphism(c4c2, "psi_sigma^2"), s.after(s));
  // rightmost factor first
  const GroupMap t = named_automorphism(c4c2, "psi_tau");
  EXPECT_EQ(named_automorphism(c4c2, "psi_tau*psi_sigma"), t.after(s));
}

TEST(NamedAutomorphism, QuaternionRepresentatives) {
  const FiniteGroup q8 = build_group("Q8");
  const std::vector<std::size_t> orders = {1, 2, 2, 3, 4};
  const auto ac = automorphism_conjugacy_classes(q8);
  std::vector<std::size_t> classes;
  for (int i = 1; i <= 5; ++i) {
    const GroupMap m = named_automorphism(q8, "psi" + std::to_string(i));
    EXPECT_EQ(m.order(), orders[i - 1]);
    classes.push_back(ac.class_index(m));
  }
  std::sort(classes.begin(), classes.end());
  EXPECT_EQ(std::unique(classes.begin(), classes.end()), classes.end());
  // psi5 = psi3 psi2
  EXPECT_EQ(named_automorphism(q8, "psi5"), named_automorphism(q8, "psi3*psi2"));
}

TEST(NamedAutomorphism, DihedralFormula) {
  for (long long n = 3; n <= 7; ++n) {
    const FiniteGroup d = build_group("D" + std::to_string(n));
    for (long long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      for (long long b = 0; b < n; ++b) {
        const GroupMap m = named_automorphism(d, "phi:" + std::to_string(a) + "," + std::to_string(b));
        for (long long e = 0; e < 2; ++e)
          for (long long i = 0; i < n; ++i) EXPECT_EQ(m(e * n + i), e * n + oracle::mod(a * i + e * b, n));
      }
    }
  }
}

TEST(NamedAutomorphism, MatricesOnElementaryGroups) {
  const FiniteGroup e3 = build_group("C2xC2xC2");
  std::vector<std::size_t> classes;
  const auto ac = automorphism_conjugacy_classes(e3);
  for (int i = 1; i <= 6; ++i) classes.push_back(ac.class_index(named_automorphism(e3, "M" + std::to_string(i))));
  std::sort(classes.begin(), classes.end());
  EXPECT_EQ(std::unique(classes.begin(), classes.end()), classes.end());
  EXPECT_EQ(named_automorphism(build_group("C3xC3"), "mat:0,-1;1,2").order(), 3u);
}

TEST(NamedAutomorphism, PermutationConjugation) {
  const FiniteGroup a4 = build_group("A4");
  EXPECT_EQ(named_automorphism(a4, "conj:(12)").order(), 2u);
  EXPECT_EQ(named_automorphism(a4, "conj:(1234)").order(), 4u);
  EXPECT_EQ(named_automorphism(a4, "conj:(123)").order(), 3u);
  EXPECT_TRUE(named_automorphism(build_group("S3"), "conj:(12)*conj:(12)").is_identity());
}
