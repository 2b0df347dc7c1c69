#include <gtest/gtest.h>

#include "quandle/catalog.hpp"
#include "quandle/io.hpp"

using namespace qf;

TEST(GroupJson, RoundTrip) {
  for (const char* name : {"C1", "D4", "Q8", "A4", "SL23"}) {
    const FiniteGroup g = build_group(name);
    const FiniteGroup back = group_from_json(json::parse(to_json(g).dump()));
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(back.name(), g.name());
  }
}

TEST(GroupJson, Malformed) {
  EXPECT_THROW(group_from_json(json::parse(R"({"name":"x","order":2})")), StructuralError);
  EXPECT_THROW(group_from_json(json::parse(R"({"name":"x","order":2,"table":[[0,1]]})")), StructuralError);
  EXPECT_THROW(group_from_json(json::parse(R"({"name":"x","order":2,"table":[[0,1],[1,1]]})")), StructuralError);
  EXPECT_THROW(group_from_json(json::parse(R"({"name":"x","order":2,"table":[[0,"a"],[1,0]]})")), StructuralError);
}

TEST(QuandleJson, RoundTripWithProvenance) {
  const Quandle q = general_alexander(named_automorphism(build_group("Dic3"), "beta_sigma"));
  const json j = to_json(q);
  EXPECT_EQ(j.at("provenance").at("group"), "Dic3");
  const Quandle back = quandle_from_json(json::parse(j.dump()));
  EXPECT_EQ(back, q);
  ASSERT_TRUE(back.provenance().has_value());
  EXPECT_EQ(back.provenance()->automorphism, q.provenance()->automorphism);
}

TEST(QuandleJson, RoundTripWithoutProvenance) {
  const Quandle q(3, {0, 2, 1, 2, 1, 0, 1, 0, 2});
  const json j = to_json(q);
  EXPECT_TRUE(j.at("provenance").is_null());
  EXPECT_EQ(quandle_from_json(j), q);
}

TEST(QuandleJson, RejectsMismatchAndBadTables) {
  json j = to_json(general_alexander(named_automorphism(build_group("C3"), "mul:2")));
  j["provenance"]["automorphism"] = {0, 1, 2};
  EXPECT_THROW(quandle_from_json(j), StructuralError);
  EXPECT_THROW(quandle_from_json(json::parse(R"({"size":2,"sym":[[1,0],[0,1]]})")), StructuralError);
  EXPECT_THROW(quandle_from_json(json::parse(R"({"size":2})")), StructuralError);
  json unknown = to_json(general_alexander(named_automorphism(build_group("C3"), "mul:2")));
  unknown["provenance"]["group"] = "Z3";
  EXPECT_THROW(quandle_from_json(unknown), LookupError);
}

TEST(ProfileJson, SchemaAndKeys) {
  const json j = to_json(profile(named_automorphism(build_group("Q8"), "psi4")));
  EXPECT_EQ(j.at("schema"), "profile.v1");
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  std::vector<std::string> expected{"schema"};
  for (const char* f : kProfileFields) expected.push_back(f);
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(j.at("p_iso_type").at("display"), "Q8");
  EXPECT_EQ(j.at("p2_flag"), false);
}

TEST(VerdictJson, RoundTrip) {
  IsoVerdict v;
  v.result = IsoResult::Isomorphic;
  v.method = IsoMethod::Theorem13;
  v.witness = std::vector<Elem>{0, 2, 1};
  v.note = "n";
  v.agreeing = {IsoMethod::BruteForce};
  const IsoVerdict back = verdict_from_json(json::parse(to_json(v).dump()));
  EXPECT_EQ(back.result, v.result);
  EXPECT_EQ(back.method, v.method);
  EXPECT_EQ(back.witness, v.witness);
  EXPECT_EQ(back.note, v.note);
  EXPECT_EQ(back.agreeing, v.agreeing);

  IsoVerdict s;
  s.result = IsoResult::NotIsomorphic;
  s.method = IsoMethod::InvariantSeparation;
  s.separator = "fix_size";
  const json js = to_json(s);
  EXPECT_EQ(js.at("result"), "not-isomorphic");
  EXPECT_EQ(js.at("method"), "invariant-separation");
  EXPECT_FALSE(js.contains("witness"));
  EXPECT_EQ(verdict_from_json(js).separator, s.separator);
}

TEST(VerdictJson, Malformed) {
  EXPECT_THROW(verdict_from_json(json::parse(R"({"result":"maybe","method":"brute-force"})")), StructuralError);
  EXPECT_THROW(verdict_from_json(json::parse(R"({"result":"isomorphic","method":"guess"})")), StructuralError);
  EXPECT_THROW(verdict_from_json(json::parse(R"({"method":"brute-force"})")), StructuralError);
}
