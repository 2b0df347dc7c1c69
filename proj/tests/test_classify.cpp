#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include <unistd.h>

#include "quandle/classify.hpp"
#include "quandle/reference_data.hpp"

using namespace qf;

namespace {

std::filesystem::path scratch_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("qf-test-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

void expect_well_formed(const ClassificationReport& r) {
  std::set<std::size_t> seen;
  for (const auto& c : r.classes) {
    ASSERT_FALSE(c.empty());
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    for (std::size_t i : c) {
      EXPECT_TRUE(seen.insert(i).second) << "pair " << i << " in two classes";
      EXPECT_EQ(r.pairs[i].profile, r.pairs[c.front()].profile);
    }
  }
  EXPECT_EQ(seen.size(), r.pairs.size());
  for (std::size_t x = 0; x < r.classes.size(); ++x) EXPECT_EQ(r.class_of(r.classes[x].back()), x);
  for (const auto& rec : r.verdict_log)
    if (rec.verdict.isomorphic()) {
      ASSERT_TRUE(rec.verdict.witness.has_value());
      EXPECT_TRUE(is_quandle_isomorphism(general_alexander(r.automorphism(rec.a)), general_alexander(r.automorphism(rec.b)),
                                         *rec.verdict.witness));
    }
}

}  // namespace

TEST(ClosedForms, KnownOrders) {
  EXPECT_EQ(closed_form_counts(13), std::optional<std::size_t>(12));
  EXPECT_EQ(closed_form_counts(2), std::optional<std::size_t>(1));
  EXPECT_EQ(closed_form_counts(9), std::optional<std::size_t>(11));
  EXPECT_EQ(closed_form_counts(4), std::optional<std::size_t>(3));
  EXPECT_EQ(closed_form_counts(6), std::optional<std::size_t>(3));
  EXPECT_EQ(closed_form_counts(10), std::optional<std::size_t>(5));
  EXPECT_EQ(closed_form_counts(8), std::nullopt);
  EXPECT_EQ(closed_form_counts(12), std::nullopt);
}

TEST(Classify, CountsUpToFifteen) {
  for (std::size_t n = 1; n <= 15; ++n) {
    const ClassificationReport r = classify_order(n);
    EXPECT_EQ(r.classes.size(), reference::kTable1[n - 1]) << "order " << n;
    EXPECT_TRUE(r.complete);
    EXPECT_FALSE(r.from_cache);
    if (const auto c = closed_form_counts(n)) {
      EXPECT_EQ(r.classes.size(), *c) << "order " << n;
    }
    expect_well_formed(r);
  }
}

TEST(Classify, SingleGroups) {
  EXPECT_EQ(classify_group(build_group("D4")).classes.size(), 4u);
  EXPECT_EQ(classify_group(build_group("C2xC2xC2")).classes.size(), 6u);
  const ClassificationReport t = classify_group(cyclic_group(1));
  EXPECT_EQ(t.classes.size(), 1u);
  EXPECT_EQ(t.pairs.size(), 1u);
}

TEST(Classify, Deterministic) {
  const ClassificationReport a = classify_order(12);
  const ClassificationReport b = classify_order(12);
  EXPECT_EQ(a.classes, b.classes);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Classify, RowOrder) {
  const ClassificationReport r = classify_order(8);
  for (std::size_t i = 1; i < r.class_profiles.size(); ++i) {
    const auto& a = r.class_profiles[i - 1];
    const auto& b = r.class_profiles[i];
    EXPECT_LE(std::tie(a.psi_order, a.fix_size), std::tie(b.psi_order, b.fix_size));
  }
}

TEST(Classify, OrderLimits) {
  EXPECT_THROW(classify_order(16), ContractViolation);
  EXPECT_THROW(classify_order(17), CapacityError);
  EXPECT_THROW(classify_order(0), ContractViolation);
}

TEST(Classify, PublishedLabelsAnnotated) {
  ClassificationReport r = classify_order(8);
  reference::annotate_published_labels(r);
  std::size_t labelled = 0;
  for (const auto& p : r.pairs) labelled += !p.published_label.empty();
  EXPECT_GT(labelled, 0u);
  std::size_t listed = 0;
  for (const auto& t : table_rows(r)) {
    EXPECT_FALSE(t.published_labels.empty()) << "row " << t.row;
    std::istringstream in(t.published_labels);
    std::set<std::string> row;
    for (std::string l; in >> l;) EXPECT_TRUE(row.insert(l).second) << l << " listed twice";
    listed += row.size();
  }
  EXPECT_EQ(listed, 20u);
}

TEST(Tables, AllFormats) {
  const ClassificationReport r = classify_order(6);
  const std::string md = emit_table(r, TableFormat::Markdown);
  EXPECT_NE(md.find("Q_GA(6): 3 classes"), std::string::npos);
  EXPECT_NE(md.find("| # | published |"), std::string::npos);
  const std::string csv = emit_table(r, TableFormat::Csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  const json j = json::parse(emit_table(r, TableFormat::Json));
  EXPECT_EQ(j.at("schema"), "qf-classify-v1");
  EXPECT_EQ(j.at("table").size(), 3u);
  EXPECT_EQ(table_format_from_string("markdown"), TableFormat::Markdown);
  EXPECT_THROW(table_format_from_string("xml"), LookupError);
}

TEST(Tables, IncompleteBanner) {
  ClassificationReport r = classify_order(4);
  r.complete = false;
  r.incomplete_reason = "test";
  EXPECT_EQ(emit_table(r, TableFormat::Markdown).rfind("> INCOMPLETE: test", 0), 0u);
}

TEST(Cache, RoundTripAndTamper) {
  const auto dir = scratch_dir("cache");
  ClassifyOptions opt;
  opt.cache_dir = dir;
  const ClassificationReport first = classify_order(8, opt);
  EXPECT_FALSE(first.from_cache);
  const auto file = cache_file(dir, 8);
  ASSERT_TRUE(std::filesystem::exists(file));

  const ClassificationReport second = classify_order(8, opt);
  EXPECT_TRUE(second.from_cache);
  EXPECT_EQ(second.classes, first.classes);
  expect_well_formed(second);

  // break one witness; the cache must be rejected and rebuilt
  json j;
  {
    std::ifstream in(file);
    j = json::parse(in);
  }
  bool tampered = false;
  for (auto& rec : j["verdict_log"])
    if (rec["verdict"].contains("witness")) {
      auto& w = rec["verdict"]["witness"];
      w[1] = w[0];
      tampered = true;
      break;
    }
  ASSERT_TRUE(tampered);
  {
    std::ofstream out(file);
    out << j.dump();
  }
  const ClassificationReport third = classify_order(8, opt);
  EXPECT_FALSE(third.from_cache);
  EXPECT_EQ(third.classes, first.classes);
  EXPECT_TRUE(classify_order(8, opt).from_cache);

  {
    std::ofstream out(file);
    out << "{ not json";
  }
  EXPECT_FALSE(classify_order(8, opt).from_cache);
  std::filesystem::remove_all(dir);
}
