#include <gtest/gtest.h>

#include <random>

#include "moca/ca.hpp"
#include "oracles.hpp"

namespace moca::ca {
namespace {

using gf::Elem;
using gf::FieldSpec;

Cells cells(const std::string& digits) { return parse_cells(digits, FieldSpec(5)); }

TEST(LocalRule, WolframConvention) {
  const LocalRule r150 = LocalRule::from_wolfram(3, 150);
  EXPECT_EQ(r150.truth_table(), (std::vector<Elem>{0, 1, 1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(r150.wolfram(), 150u);
  // linear form of rule 150 materializes to the same table
  const LocalRule lin150 = LocalRule::linear(FieldSpec(2), {1, 1, 1});
  EXPECT_EQ(lin150.truth_table(), r150.truth_table());
  EXPECT_EQ(LocalRule::linear(FieldSpec(2), {1, 0, 1}).wolfram(), 90u);
}

TEST(LocalRule, Validation) {
  EXPECT_THROW(LocalRule::from_wolfram(3, 256), ValidationError);
  EXPECT_THROW(LocalRule::table(3, {0, 1}), ValidationError);
  EXPECT_THROW(LocalRule::linear(FieldSpec(2), {1}), ValidationError);
}

TEST(Evaluate, Figure1) {
  const LocalRule r150 = LocalRule::from_wolfram(3, 150);
  EXPECT_EQ(evaluate(r150, cells("100001")), cells("1001"));
}

TEST(Evaluate, Figure3BlockTransformation) {
  // d=5 rule f = x1 + x3 + x5
  const LocalRule rule = LocalRule::linear(FieldSpec(2), {1, 0, 1, 0, 1});
  EXPECT_EQ(evaluate(rule, cells("01001011")), cells("1101"));
}

TEST(Evaluate, SingleWindowAndErrors) {
  const LocalRule r150 = LocalRule::from_wolfram(3, 150);
  EXPECT_EQ(evaluate(r150, cells("110")), cells("0"));
  EXPECT_THROW(evaluate(r150, cells("11")), ValidationError);
}

TEST(Evaluate, TernaryLinear) {
  const LocalRule rule = LocalRule::linear(FieldSpec(3), {1, 2});
  // f(x1,x2) = x1 + 2 x2 over F_3 on 2 1 0 -> (2+2*1, 1+0) = (1, 1)
  EXPECT_EQ(evaluate(rule, cells("210")), cells("11"));
}

TEST(Bipermutive, Examples) {
  EXPECT_TRUE(LocalRule::from_wolfram(3, 150).is_bipermutive());
  EXPECT_TRUE(LocalRule::linear(FieldSpec(2), {1, 0, 1}).is_bipermutive());
  EXPECT_FALSE(LocalRule::table(3, std::vector<Elem>(8, 0)).is_bipermutive());
  // rightmost-only permutive: f = x3
  EXPECT_FALSE(LocalRule::linear(FieldSpec(2), {0, 0, 1}).is_bipermutive());
  EXPECT_TRUE(LocalRule::linear(FieldSpec(2), {0, 0, 1}).rightmost_permutive());
  EXPECT_FALSE(LocalRule::linear(FieldSpec(2), {0, 0, 1}).leftmost_permutive());
}

TEST(FromGenerating, SpecExamples) {
  EXPECT_EQ(LocalRule::from_generating(3, {0, 0}).wolfram(), 90u);
  EXPECT_EQ(LocalRule::from_generating(3, {0, 1}).wolfram(), 150u);
  // d=2: XOR rule, table 0110 -> code 6
  EXPECT_EQ(LocalRule::from_generating(2, {}).wolfram(), 6u);
}

TEST(FromGenerating, RoundTripsThroughExtraction) {
  for (unsigned d = 2; d <= 5; ++d) {
    for (const LocalRule& rule : test::all_binary_bipermutive(d)) {
      const LocalRule again = LocalRule::from_generating(d, rule.generating_table());
      EXPECT_EQ(again, rule);
    }
  }
}

TEST(AssociatedPolynomial, Examples) {
  const FieldSpec f2(2);
  EXPECT_EQ(associated_polynomial(LocalRule::linear(f2, {1, 0, 1})),
            gf::Polynomial(f2, {1, 0, 1}));
  EXPECT_EQ(associated_polynomial(LocalRule::linear(f2, {1, 1, 1})),
            gf::Polynomial(f2, {1, 1, 1}));
  EXPECT_EQ(associated_polynomial(LocalRule::linear(f2, {0, 1})), gf::Polynomial(f2, {0, 1}));
  EXPECT_THROW(associated_polynomial(LocalRule::from_wolfram(3, 150)), ValidationError);
}

TEST(Fusion, Examples) {
  EXPECT_EQ(fusion(cells("10"), cells("00")), cells("100"));
  EXPECT_EQ(fusion(cells("00"), cells("00")), cells("000"));
  // u = 01 and v = 10 overlap on t = 1, so they fuse
  EXPECT_EQ(fusion(cells("01"), cells("10")), cells("010"));
  EXPECT_THROW(fusion(cells("01"), cells("00")), ValidationError);
  EXPECT_THROW(fusion(cells("10"), cells("11")), ValidationError);
  EXPECT_THROW(fusion(cells("10"), cells("001")), ValidationError);
}

TEST(DeBruijn, Figure1Graph) {
  const DeBruijnGraph g(LocalRule::from_wolfram(3, 150));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 8u);
  // codec: 00 -> 0, 10 -> 1, 01 -> 2, 11 -> 3
  EXPECT_EQ(g.label(0, 2), 1u);  // 00 -> 01 labeled f(001) = 1
  EXPECT_EQ(g.label(0, 0), 0u);  // self loop at 00 labeled 0
  EXPECT_EQ(g.label(3, 3), 1u);  // self loop at 11 labeled 1
  EXPECT_EQ(g.label(1, 0), 1u);  // 10 -> 00 labeled f(100) = 1
  EXPECT_EQ(g.label(1, 2), 0u);  // 10 -> 01 labeled f(101) = 0
  EXPECT_THROW(g.label(0, 1), ValidationError);  // 00 -> 10 not an edge
}

TEST(DeBruijn, ConstantRuleAndCounts) {
  const DeBruijnGraph g(LocalRule::table(3, std::vector<Elem>(8, 0)));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 8u);
  for (std::size_t u = 0; u < 4; ++u) {
    for (Elem c = 0; c < 2; ++c) EXPECT_EQ(g.label_by_symbol(u, c), 0u);
  }
}

TEST(DeBruijn, PathReadingReproducesEvaluate) {
  // exhaustive d=3, q=2, inputs of length 6
  const LocalRule r150 = LocalRule::from_wolfram(3, 150);
  const DeBruijnGraph g(r150);
  const designs::BlockIndexCodec codec(FieldSpec(2), 2);
  for (std::size_t x = 0; x < (1u << 6); ++x) {
    Cells input(6);
    for (std::size_t i = 0; i < 6; ++i) input[i] = static_cast<Elem>((x >> i) & 1);
    const Cells expected = evaluate(r150, input);
    Cells labels;
    for (std::size_t i = 0; i + 2 < input.size(); ++i) {
      const std::size_t u = codec.encode(std::span<const Elem>(input).subspan(i, 2));
      const std::size_t v = codec.encode(std::span<const Elem>(input).subspan(i + 1, 2));
      labels.push_back(g.label(u, v));
    }
    EXPECT_EQ(labels, expected);
  }
}

TEST(Preimage, Figure5) {
  const LocalRule r150 = LocalRule::from_wolfram(3, 150);
  EXPECT_EQ(preimage(r150, cells("100110"), cells("01"), 5), cells("10000101"));
}

TEST(Preimage, TrivialAndSmall) {
  const LocalRule r90 = LocalRule::linear(FieldSpec(2), {1, 0, 1});
  EXPECT_EQ(preimage(r90, cells("0000"), cells("00"), 3), cells("000000"));
  const LocalRule r150 = LocalRule::from_wolfram(3, 150);
  EXPECT_EQ(preimage(r150, cells("1"), cells("10"), 1), cells("100"));
}

TEST(Preimage, Errors) {
  const LocalRule r150 = LocalRule::from_wolfram(3, 150);
  EXPECT_THROW(preimage(LocalRule::linear(FieldSpec(2), {0, 1, 1}), cells("10"), cells("00"), 1),
               ValidationError);
  EXPECT_THROW(preimage(r150, cells("10"), cells("00"), 0), ValidationError);
  EXPECT_THROW(preimage(r150, cells("10"), cells("00"), 4), ValidationError);
  EXPECT_THROW(preimage(r150, cells("10"), cells("0"), 1), ValidationError);
}

TEST(Preimage, RoundTripExhaustiveBinary) {
  // every bipermutive rule d <= 4, every seed, every position, fixed outputs
  std::mt19937 rng(11);
  for (unsigned d = 2; d <= 4; ++d) {
    for (const LocalRule& rule : test::all_binary_bipermutive(d)) {
      for (int trial = 0; trial < 3; ++trial) {
        Cells y(5);
        for (Elem& v : y) v = rng() & 1;
        for (std::size_t seed_bits = 0; seed_bits < (1u << (d - 1)); ++seed_bits) {
          Cells seed(d - 1);
          for (std::size_t i = 0; i < seed.size(); ++i) {
            seed[i] = static_cast<Elem>((seed_bits >> i) & 1);
          }
          for (std::size_t pos = 1; pos <= y.size() + 1; ++pos) {
            const Cells x = preimage(rule, y, seed, pos);
            ASSERT_EQ(x.size(), y.size() + d - 1);
            EXPECT_EQ(evaluate(rule, x), y);
            // x agrees with the seed at the position
            for (std::size_t i = 0; i < seed.size(); ++i) {
              EXPECT_EQ(x[pos - 1 + i], seed[i]);
            }
          }
        }
      }
    }
  }
}

TEST(Preimage, RoundTripTernaryLinearSampled) {
  std::mt19937 rng(13);
  const FieldSpec f3(3);
  for (const LocalRule& rule : test::all_linear_bipermutive(f3, 3)) {
    for (int trial = 0; trial < 5; ++trial) {
      Cells y(4);
      for (Elem& v : y) v = rng() % 3;
      Cells seed{static_cast<Elem>(rng() % 3), static_cast<Elem>(rng() % 3)};
      const std::size_t pos = 1 + rng() % (y.size() + 1);
      const Cells x = preimage(rule, y, seed, pos);
      EXPECT_EQ(evaluate(rule, x), y);
    }
  }
}

TEST(IteratePreimage, SpecExamples) {
  const LocalRule r150 = LocalRule::from_wolfram(3, 150);
  EXPECT_EQ(iterate_preimage(r150, cells("10"), {}), cells("10"));
  const std::vector<SeedAt> seeds{{cells("00"), 1}};
  EXPECT_EQ(iterate_preimage(r150, cells("10"), seeds), cells("0011"));
}

TEST(IteratePreimage, RoundTripProperty) {
  std::mt19937 rng(17);
  for (unsigned d = 2; d <= 5; ++d) {
    const auto rules = test::all_binary_bipermutive(d);
    for (int trial = 0; trial < 10; ++trial) {
      const LocalRule& rule = rules[rng() % rules.size()];
      Cells y(3 + rng() % 4);
      for (Elem& v : y) v = rng() & 1;
      const unsigned t = rng() % 5;
      std::vector<SeedAt> seeds;
      std::size_t len = y.size();
      for (unsigned s = 0; s < t; ++s) {
        Cells block(d - 1);
        for (Elem& v : block) v = rng() & 1;
        seeds.push_back({block, 1 + rng() % (len + 1)});
        len += d - 1;
      }
      const Cells x = iterate_preimage(rule, y, seeds);
      EXPECT_EQ(x.size(), y.size() + t * (d - 1));
      EXPECT_EQ(evaluate_iterated(rule, x, t), y);
    }
  }
}

TEST(CellsText, RoundTrip) {
  EXPECT_EQ(format_cells(cells("0120")), "0120");
  EXPECT_THROW(parse_cells("012", FieldSpec(2)), ValidationError);
  EXPECT_THROW(parse_cells("01a", FieldSpec(2)), ValidationError);
}

}  // namespace
}  // namespace moca::ca
