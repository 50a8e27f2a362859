#include <gtest/gtest.h>

#include <sstream>

#include <halving/report.hpp>

#include "fixtures.hpp"

using namespace halving;

namespace {

const std::vector<BoundPreset> kBoth{BoundPreset::paper_literal, BoundPreset::corrected};

AnalysisReport analyze_file_fixture(const PointSet& ps) {
  InstanceSource src;
  src.kind = "file";
  src.path = "fixture.txt";
  return analyze(ps, src, kBoth, Enumerator::rotational, true);
}

}  // namespace

TEST(Analyze, ConvexQuadrilateral) {
  const AnalysisReport rep = analyze_file_fixture(fixtures::convex_quad());
  EXPECT_EQ(rep.measurement.graph.m(), 2u);
  EXPECT_EQ(rep.measurement.crossings.cr, 1u);
  EXPECT_TRUE(rep.measurement.identity.holds);
  EXPECT_TRUE(rep.rotation.pass);
  EXPECT_TRUE(rep.corrected_dominance);
  EXPECT_FALSE(rep.lemmas.odd_counts);  // n_1 = 4 is even
  ASSERT_TRUE(rep.oracle_equivalence.has_value());
  EXPECT_TRUE(*rep.oracle_equivalence);
  EXPECT_TRUE(rep.ok()) << ::testing::PrintToString(rep.failures);
}

TEST(Analyze, TriangleWithCenter) {
  const AnalysisReport rep = analyze_file_fixture(fixtures::triangle_with_center());
  EXPECT_EQ(rep.measurement.graph.m(), 3u);
  EXPECT_EQ(rep.measurement.crossings.cr, 0u);
  EXPECT_TRUE(rep.measurement.identity.holds);
  EXPECT_TRUE(rep.lemmas.odd_counts);  // n_1 = 3, n_3 = 1
  EXPECT_TRUE(rep.ok()) << ::testing::PrintToString(rep.failures);
}

TEST(Analyze, TwoPointsHaveNoBounds) {
  const AnalysisReport rep = analyze_file_fixture(fixtures::two_points());
  EXPECT_EQ(rep.measurement.graph.m(), 1u);
  EXPECT_TRUE(rep.bounds.empty());
  EXPECT_TRUE(rep.ok()) << ::testing::PrintToString(rep.failures);
}

TEST(Json, FieldsEchoModuleValues) {
  InstanceSource src;
  src.kind = "random";
  src.seed = 3;
  src.bbox = kDefaultCoordinateCap;
  const PointSet ps = fixtures::random_set(20, 3);
  const AnalysisReport rep = analyze(ps, src, kBoth, Enumerator::rotational, false);
  const auto j = to_json(rep);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["input"]["n"], 20);
  EXPECT_EQ(j["input"]["seed"], 3);
  EXPECT_EQ(j["m"], rep.measurement.graph.m());
  EXPECT_EQ(j["cr"], rep.measurement.crossings.cr);
  EXPECT_EQ(j["M"], rep.measurement.histogram.M);
  EXPECT_EQ(j["alpha"], rep.measurement.histogram.alpha);
  EXPECT_TRUE(j["oracle_equivalence"].is_null());
  ASSERT_EQ(j["bounds"].size(), 2u);
  EXPECT_EQ(j["bounds"][0]["preset"], "paper-literal");
  EXPECT_EQ(j["bounds"][1]["m_star"].get<double>(), static_cast<double>(rep.bounds[1].m_star));

  // sparse histogram, degree ascending
  std::size_t previous = 0, total = 0;
  for (const auto& pair : j["degree_histogram"]) {
    const std::size_t degree = pair[0], count = pair[1];
    EXPECT_GT(degree, previous);
    EXPECT_GT(count, 0u);
    previous = degree;
    total += count;
  }
  EXPECT_EQ(total, 20u);
}

TEST(Json, ByteIdenticalReplay) {
  InstanceSource src;
  src.kind = "convex";
  src.seed = 9;
  const PointSet ps = fixtures::convex_set(12, 9);
  const std::string a = to_json(analyze(ps, src, kBoth, Enumerator::rotational, true)).dump(2);
  const std::string b = to_json(analyze(ps, src, kBoth, Enumerator::rotational, true)).dump(2);
  EXPECT_EQ(a, b);
}

TEST(Csv, HeaderAndRows) {
  EXPECT_EQ(std::string(kCsvHeader).rfind("n,preset,m_star,ratio,measured_m,measured_cr,M,alpha,identity_holds,dominance", 0), 0u);
  const BoundReport b = bound_report(fixtures::convex_quad(), BoundPreset::corrected);
  const std::string row = to_csv(csv_row(b, 5));
  EXPECT_EQ(row.rfind("4,corrected,", 0), 0u);
  EXPECT_NE(row.find(",2,1,4,1,true,true,5,"), std::string::npos) << row;

  const std::string probe = to_csv(csv_row(asymptotic_probe({1000}, BoundPreset::corrected).front()));
  EXPECT_EQ(probe.rfind("1000,corrected,", 0), 0u);
  EXPECT_EQ(probe.substr(probe.size() - 7), ",,,,,,,");

  CsvRow failed;
  failed.n = 6;
  failed.preset = "corrected";
  failed.error = "rejection-budget-exhausted: a, b";
  EXPECT_EQ(to_csv(failed), "6,corrected,,,,,,,,,,\"rejection-budget-exhausted: a, b\"");
}

TEST(FormatReal, FifteenSignificantDigits) {
  EXPECT_EQ(format_real(2.0L), "2");
  EXPECT_EQ(format_real(1.0L / 3), "0.333333333333333");
}

TEST(Text, MentionsVerdict) {
  std::ostringstream os;
  write_text(os, analyze_file_fixture(fixtures::convex_quad()));
  EXPECT_NE(os.str().find("verdict     ok"), std::string::npos) << os.str();
  EXPECT_NE(os.str().find("n_1 = 4 is even"), std::string::npos) << os.str();
}
