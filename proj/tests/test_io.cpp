#include "fank/error.hpp"
#include "fank/examples.hpp"
#include "fank/fan_io.hpp"
#include "fank/report.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace fank;
using namespace fank::testing;

TEST(PlpText, ParseAndFormat) {
  auto file = parse_plp_text("# values\nfan p2.fan\non s1: a1 - 1\non s2: 0  # zero\non s3: a2^-1\n", 2);
  EXPECT_EQ(file.fan_path, "p2.fan");
  ASSERT_EQ(file.entries.size(), 3u);
  EXPECT_EQ(file.entries[2].first, "s3");
  EXPECT_EQ(file.entries[2].second, parse_laurent("a2^-1", 2));
  auto fan = std::make_shared<const Fan>(example_fan("p2"));
  PiecewisePoly F = plp_from_entries(fan, file);
  auto again = parse_plp_text(format_plp(F, "p2.fan"), 2);
  EXPECT_EQ(plp_from_entries(fan, again).values(), F.values());
}

TEST(PlpText, Errors) {
  EXPECT_THROW(parse_plp_text("on s1: a1\n", 2), ParseError);
  EXPECT_THROW(parse_plp_text("fan x\non s1 a1\n", 2), ParseError);
  EXPECT_THROW(parse_plp_text("fan x\non s1: a1\non s1: a2\n", 2), ParseError);
  try {
    parse_plp_text("fan x\non s1: a1 +* a2\n", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  auto fan = std::make_shared<const Fan>(example_fan("p2"));
  EXPECT_THROW(plp_from_entries(fan, parse_plp_text("fan x\non s1: 1\n", 2)), Error);
  EXPECT_THROW(plp_from_entries(fan, parse_plp_text("fan x\non s9: 1\n", 2)), Error);
}

TEST(PlpText, PartialEntries) {
  auto fan = std::make_shared<const Fan>(example_fan("hirzebruch-r", 1));
  auto F = partial_plp_from_entries(fan, parse_plp_text("fan x\non s3: a1\non s1: a2\n", 2));
  ASSERT_EQ(F.values().size(), 2u);
  for (std::size_t k = 0; k < 2; ++k)
    EXPECT_EQ(F.value(k), F.fan().maximal_cell(k).name == "s1" ? parse_laurent("a2", 2) : parse_laurent("a1", 2));
}

TEST(Reports, JsonRoundTrip) {
  Rng rng(9);
  std::vector<std::pair<std::string, Fan>> fans;
  for (const auto& e : example_registry()) fans.emplace_back(e.name, example_fan(e.name, 2));
  for (int t = 0; t < 10; ++t) fans.emplace_back("random", random_complete_2d_fan(rng));
  fans.emplace_back("quadrant", parse_fan("dim 2\nray a 2 0\nray b 0 1\ncone c a b\n"));
  for (const auto& [name, fan] : fans)
    for (bool verdict : {false, true}) {
      Report r = make_report(verdict ? "classify" : "check", name, fan, verdict);
      EXPECT_EQ(report_from_json(report_to_json(r)), r);
      EXPECT_EQ(report_from_json(report_to_json(r, -1)), r);
    }
}

TEST(Reports, FlagsRederivable) {
  for (const auto& e : example_registry()) {
    Fan fan = example_fan(e.name, 1);
    Report r = report_from_json(report_to_json(make_report("check", e.name, fan, false)));
    EXPECT_EQ(r.flags.smooth, is_smooth_fan(fan));
    EXPECT_EQ(r.flags.complete, is_complete(fan));
    EXPECT_EQ(r.flags.simplicial, is_simplicial_fan(fan));
    EXPECT_EQ(r.flags.all_distant, singularity_report(fan).all_distant);
    EXPECT_EQ(r.rays, fan.rays().size());
  }
}

TEST(Reports, RejectsOtherSchema) {
  std::string text = report_to_json(make_report("check", "p2", example_fan("p2"), false));
  text.replace(text.find("\"schema\": 1"), 11, "\"schema\": 2");
  EXPECT_THROW(report_from_json(text), Error);
  EXPECT_THROW(report_from_json("{"), Error);
}
