#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quandle/catalog.hpp"
#include "quandle/iso.hpp"

using namespace qf;

namespace {

GroupMap aut(const std::string& group, const std::string& name) { return named_automorphism(build_group(group), name); }

void expect_verified(const GroupMap& x, const GroupMap& y, const IsoVerdict& v) {
  ASSERT_TRUE(v.isomorphic());
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(is_quandle_isomorphism(general_alexander(x), general_alexander(y), *v.witness));
}

std::vector<GroupMap> class_reps(const std::string& name) {
  std::vector<GroupMap> out;
  for (const auto& c : automorphism_conjugacy_classes(build_group(name)).classes) out.push_back(c.representative);
  return out;
}

}  // namespace

TEST(BruteForceIso, IdentityOnItself) {
  const GroupMap x = aut("D4", "phi:3,1");
  const IsoVerdict v = brute_force_iso(x, x);
  expect_verified(x, x, v);
  EXPECT_EQ(v.method, IsoMethod::BruteForce);
}

TEST(BruteForceIso, SmallCyclicAgainstSwap) {
  // both P are C2 here, so the profiles alone do not separate them; the search finds an isomorphism
  const GroupMap x = aut("C4", "mul:3");
  const GroupMap y = aut("C2xC2", "swap");
  const InvariantProfile px = profile(x), py = profile(y);
  EXPECT_EQ(px.p_iso_type.order, 2u);
  EXPECT_EQ(py.p_iso_type.order, 2u);
  EXPECT_EQ(first_difference(px, py), std::nullopt);
  EXPECT_EQ(brute_force_iso(x, y).isomorphic(),
            oracle::naive_isomorphic(general_alexander(x), general_alexander(y), true));
  expect_verified(x, y, brute_force_iso(x, y));
}

TEST(BruteForceIso, QuaternionAgainstDihedral) {
  const GroupMap x = aut("Q8", "psi3"), y = aut("D4", "phi:3,1");
  expect_verified(x, y, brute_force_iso(x, y));
}

TEST(BruteForceIso, CapacityBound) {
  const GroupMap x = aut("D8", "id");
  EXPECT_THROW(brute_force_iso(x, x, 8), CapacityError);
}

TEST(Theorem13, CyclicAgainstDihedral) {
  const GroupMap x = aut("C10", "mul:3"), y = aut("D5", "phi:3,1");
  const IsoVerdict v = theorem13_iso(x, y);
  expect_verified(x, y, v);
  EXPECT_EQ(v.method, IsoMethod::Theorem13);
}

TEST(Theorem13, OrderSixteenDihedralSeparatedByFix) {
  const GroupMap x = aut("D8", "phi:1,2"), y = aut("D8", "phi:5,2");
  const IsoVerdict v = theorem13_iso(x, y);
  EXPECT_EQ(v.result, IsoResult::NotIsomorphic);
  EXPECT_EQ(v.separator, std::optional<std::string>("condition (B)"));
  EXPECT_EQ(profile(x).fix_size, 8u);
  EXPECT_EQ(profile(y).fix_size, 4u);
}

TEST(Theorem13, IdenticalInputs) {
  for (const char* g : {"C4xC2", "D6", "C3xC3"})
    for (const auto& psi : class_reps(g)) {
      const IsoVerdict v = theorem13_iso(psi, psi);
      if (!v.decided()) continue;
      expect_verified(psi, psi, v);
    }
}

TEST(Theorem13, UndecidedWithoutTheProperties) {
  const GroupMap x = aut("Q8", "psi4");
  const IsoVerdict v = theorem13_iso(x, x);
  EXPECT_EQ(v.result, IsoResult::Undecided);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(Theorem13, GroupOrdersDiffer) {
  const IsoVerdict v = theorem13_iso(aut("C4", "id"), aut("C6", "id"));
  EXPECT_EQ(v.separator, std::optional<std::string>("condition (A)"));
}

TEST(Theorem13, AgreesWithBruteForceOnSmallGroups) {
  for (std::size_t n : {4u, 6u, 8u, 9u, 10u, 12u}) {
    std::vector<GroupMap> reps;
    for (const auto& g : groups_of_order(n))
      for (const auto& c : automorphism_conjugacy_classes(g).classes) reps.push_back(c.representative);
    for (const auto& x : reps)
      for (const auto& y : reps) {
        const IsoVerdict v = theorem13_iso(x, y);
        if (!v.decided()) continue;
        EXPECT_EQ(v.isomorphic(), brute_force_iso(x, y).isomorphic()) << x.source().name() << " " << y.source().name();
        if (v.isomorphic()) expect_verified(x, y, v);
      }
  }
}

TEST(SimpleGroupDecider, PrimeCyclic) {
  EXPECT_TRUE(simple_group_decider(aut("C7", "mul:2"), aut("C7", "mul:2")).isomorphic());
  EXPECT_EQ(simple_group_decider(aut("C7", "mul:2"), aut("C7", "mul:3")).result, IsoResult::NotIsomorphic);
  const GroupMap a = aut("C5", "mul:2"), b = aut("C5", "mul:3");
  EXPECT_EQ(simple_group_decider(a, b).result, IsoResult::NotIsomorphic);
  EXPECT_FALSE(brute_force_iso(a, b).isomorphic());
  EXPECT_THROW(simple_group_decider(aut("C6", "id"), aut("C6", "id")), ContractViolation);
}

TEST(AbelianDecider, SquareOfPrime) {
  const GroupMap x = aut("C9", "mul:4"), y = aut("C9", "mul:7");
  expect_verified(x, y, abelian_decider(x, y));
  EXPECT_TRUE(abelian_decider(aut("C2xC2", "id"), aut("C4", "id")).isomorphic());
  EXPECT_EQ(abelian_decider(aut("C2xC2xC2", "M5"), aut("C2xC2xC2", "M6")).result, IsoResult::NotIsomorphic);
  EXPECT_THROW(abelian_decider(aut("S3", "id"), aut("C6", "id")), ContractViolation);
}

TEST(Decide, PublishedMerges) {
  const std::vector<std::array<std::string, 4>> pairs = {
      {"C4xC2", "psi_sigma*psi_sigma", "D4", "phi:1,2"},
      {"C6xC2", "alpha_sigma*alpha_sigma", "A4", "conj:(123)"},
      {"C2xC2xC2", "M4", "C4xC2", "psi_sigma"},
      {"Q8", "psi3", "D4", "phi:3,1"},
  };
  for (const auto& p : pairs) {
    const GroupMap x = aut(p[0], p[1]), y = aut(p[2], p[3]);
    const IsoVerdict v = decide(x, y);
    expect_verified(x, y, v);
  }
}

TEST(Decide, SeparationNamesADifferingField) {
  const GroupMap x = aut("C2xC2xC2", "M5"), y = aut("C2xC2xC2", "M6");
  const IsoVerdict v = decide(x, y);
  ASSERT_EQ(v.result, IsoResult::NotIsomorphic);
  if (v.method == IsoMethod::InvariantSeparation) {
    ASSERT_TRUE(v.separator.has_value());
    EXPECT_EQ(first_difference(profile(x), profile(y)), v.separator);
  }
  const IsoVerdict w = decide(aut("D8", "phi:1,2"), aut("D8", "phi:5,2"));
  EXPECT_EQ(w.method, IsoMethod::InvariantSeparation);
  EXPECT_EQ(w.separator, std::optional<std::string>("fix_size"));
}

TEST(Decide, ForcedModes) {
  const GroupMap x = aut("Q8", "psi4"), y = aut("SL23", "id");
  DecideOptions brute;
  brute.mode = DecideOptions::Mode::Brute;
  EXPECT_EQ(decide(x, x, brute).method, IsoMethod::BruteForce);
  DecideOptions thm;
  thm.mode = DecideOptions::Mode::Theorem13;
  EXPECT_EQ(decide(x, x, thm).result, IsoResult::Undecided);
  EXPECT_EQ(decide(x, y).result, IsoResult::NotIsomorphic);
}

TEST(Decide, InvariantUnderConjugation) {
  for (const char* g : {"D4", "Q8", "C4xC2"}) {
    const auto all = automorphism_group(build_group(g));
    for (const auto& psi : class_reps(g))
      for (std::size_t i = 0; i < all.size(); i += 5) {
        const GroupMap other = psi.conjugated_by(all[i]);
        expect_verified(psi, other, decide(psi, other));
      }
  }
}

TEST(Theorem39, WitnessPropertiesHold) {
  const GroupMap x = aut("C2xC2xC2", "M4"), y = aut("C4xC2", "psi_sigma");
  const IsoVerdict v = decide(x, y);
  ASSERT_TRUE(v.isomorphic());
  EXPECT_TRUE(check_theorem39_properties(*v.witness, x, y).ok());
  const std::vector<Elem> id{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_TRUE(check_theorem39_properties(id, y, y).ok());
  EXPECT_THROW(check_theorem39_properties({1, 0, 2, 3, 4, 5, 6, 7}, y, y), ContractViolation);
}

TEST(Theorem39, TranslatedWitnessIsRejected) {
  // a left translation is a quandle automorphism but moves e
  const GroupMap y = aut("D4", "phi:3,1");
  const Permutation t = left_translation(y.source(), 1);
  ASSERT_TRUE(is_quandle_isomorphism(general_alexander(y), general_alexander(y), t));
  EXPECT_THROW(check_theorem39_properties(t, y, y), ContractViolation);
}
