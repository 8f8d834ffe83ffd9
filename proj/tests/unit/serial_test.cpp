#include <gtest/gtest.h>

#include "moca/serial.hpp"

namespace moca::serial {
namespace {

using ca::LocalRule;
using gf::FieldSpec;

TEST(RuleJson, RoundTrips) {
  const LocalRule lin = LocalRule::linear(FieldSpec(3), {1, 2, 1});
  EXPECT_EQ(rule_from_json(rule_to_json(lin)), lin);
  const LocalRule tab = LocalRule::from_wolfram(3, 150);
  EXPECT_EQ(rule_from_json(rule_to_json(tab)), tab);
  EXPECT_EQ(rule_to_json(tab)["wolfram"], 150);
}

TEST(RuleJson, ParsesSpecFormats) {
  const auto lin = rule_from_json(json::parse(R"({"kind":"linear","q":2,"coeffs":[1,1,1]})"));
  EXPECT_EQ(lin.wolfram(), 150u);
  const auto tab = rule_from_json(json::parse(R"({"kind":"table","d":3,"wolfram":150})"));
  EXPECT_EQ(tab.truth_table(), (std::vector<gf::Elem>{0, 1, 1, 0, 1, 0, 0, 1}));
}

TEST(RuleJson, Rejections) {
  EXPECT_THROW(rule_from_json(json::parse(R"({"kind":"spline"})")), ValidationError);
  EXPECT_THROW(rule_from_json(json::parse(R"({"kind":"linear","q":4,"coeffs":[1,1]})")),
               ValidationError);
  EXPECT_THROW(rule_from_json(json::parse(R"({"kind":"table","d":3,"wolfram":999})")),
               ValidationError);
}

TEST(PolyJson, AscendingDegree) {
  const gf::Polynomial p(FieldSpec(2), {1, 0, 1});
  EXPECT_EQ(poly_to_json(p).dump(), "[1,0,1]");
  EXPECT_EQ(poly_from_json(json::parse("[1,0,1]"), FieldSpec(2)), p);
}

TEST(FamilyJson, RoundTripAndValidation) {
  const linear::MocaFamily family = linear::max_family(2, 3);
  const json j = family_to_json(family);
  EXPECT_EQ(j["size"], 3);
  const linear::MocaFamily back = family_from_json(j);
  EXPECT_EQ(back.polynomials, family.polynomials);
  json bad = j;
  bad["size"] = 7;
  EXPECT_THROW(family_from_json(bad), ValidationError);
}

TEST(PairJson, RoundTrip) {
  const auto j = pair_to_json(LocalRule::linear(FieldSpec(2), {1, 0, 1}),
                              LocalRule::from_wolfram(3, 150));
  const auto [f, g] = pair_from_json(j);
  EXPECT_TRUE(f.is_linear());
  EXPECT_EQ(g.wolfram(), 150u);
  EXPECT_THROW(pair_from_json(json::parse(R"({"f":{"kind":"linear","q":2,"coeffs":[1,1]}})")),
               ValidationError);
}

TEST(SquareText, Figure4ByteForByte) {
  const auto square = designs::cayley_table(LocalRule::from_wolfram(3, 150));
  EXPECT_EQ(square_to_text(square), "1 4 3 2\n2 3 4 1\n4 1 2 3\n3 2 1 4\n");
}

TEST(SquareJson, OneBasedRoundTrip) {
  const auto square = designs::cayley_table(LocalRule::from_wolfram(3, 150));
  const json j = square_to_json(square);
  EXPECT_EQ(j["rows"][0], json::parse("[1,4,3,2]"));
  const auto back = square_from_json(j);
  EXPECT_EQ(back.cells, square.cells);
}

TEST(SymbolMatrixJson, RoundTrip) {
  const auto squares = linear::family_to_mols(linear::max_family(2, 2));
  const designs::OrthogonalArray oa = designs::mols_to_oa(squares);
  const json j = oa_to_json(oa);
  EXPECT_EQ(j["strength"], 2);
  EXPECT_EQ(j["index"], 1);
  const designs::SymbolMatrix back = symbol_matrix_from_json(j);
  EXPECT_EQ(back.cells, oa.matrix.cells);
  EXPECT_EQ(back.symbols, oa.matrix.symbols);
}

TEST(SharesJson, OneBasedValues) {
  const std::vector<sss::Share> shares{{1, 3}, {2, 0}};
  const json j = shares_to_json(shares);
  EXPECT_EQ(j[0]["value"], 4);
  EXPECT_EQ(j[1]["value"], 1);
  const auto back = shares_from_json(j);
  EXPECT_EQ(back[0].value, 3u);
  EXPECT_EQ(back[1].value, 0u);
  EXPECT_THROW(shares_from_json(json::parse(R"([{"player":1,"value":0}])")), ValidationError);
}

TEST(FunctionJson, RoundTrip) {
  const auto f = boolfun::bent_from_family(linear::max_family(2, 2));
  const json j = function_to_json(f);
  EXPECT_EQ(j["table_hex"], "06ca");
  EXPECT_EQ(function_from_json(j).table, f.table);
}

}  // namespace
}  // namespace moca::serial
