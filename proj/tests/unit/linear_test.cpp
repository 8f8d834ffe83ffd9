#include <gtest/gtest.h>

#include "moca/linear_moca.hpp"
#include "oracles.hpp"

namespace moca::linear {
namespace {

using ca::LocalRule;
using gf::Elem;
using gf::FieldSpec;

LocalRule lin(Elem q, std::vector<Elem> coeffs) {
  return LocalRule::linear(FieldSpec(q), std::move(coeffs));
}

TEST(MakeLinearPair, Validation) {
  EXPECT_NO_THROW(make_linear_pair(lin(2, {1, 0, 1}), lin(2, {1, 1, 1})));
  EXPECT_THROW(make_linear_pair(lin(2, {1, 0, 1}), lin(3, {1, 1, 1})), ValidationError);
  EXPECT_THROW(make_linear_pair(lin(2, {1, 1}), lin(2, {1, 1, 1})), ValidationError);
  EXPECT_THROW(make_linear_pair(lin(2, {0, 1, 1}), lin(2, {1, 1, 1})), ValidationError);
  EXPECT_THROW(make_linear_pair(LocalRule::from_wolfram(3, 150), lin(2, {1, 1, 1})),
               ValidationError);
}

TEST(AreOrthogonalLinear, Examples) {
  EXPECT_TRUE(are_orthogonal_linear(lin(2, {1, 0, 1}), lin(2, {1, 1, 1})));
  EXPECT_FALSE(are_orthogonal_linear(lin(2, {1, 1, 1}), lin(2, {1, 1, 1})));
  EXPECT_TRUE(are_orthogonal_linear(lin(3, {1, 0, 1}), lin(3, {1, 1, 1})));
}

TEST(AreOrthogonalLinear, Theorem41EquivalenceExhaustive) {
  // gcd verdict vs brute-force superposition verdict over all ordered pairs:
  // q=2 for n <= 4 and q=3 for n <= 2.
  for (const auto& [q, max_n] : std::vector<std::pair<Elem, unsigned>>{{2, 4}, {3, 2}}) {
    const FieldSpec field(q);
    for (unsigned n = 1; n <= max_n; ++n) {
      const auto rules = test::all_linear_bipermutive(field, n + 1);
      for (const LocalRule& f : rules) {
        for (const LocalRule& g : rules) {
          const bool gcd_verdict = are_orthogonal_linear(f, g);
          const bool table_verdict = test::brute_orthogonal(designs::cayley_table(f),
                                                            designs::cayley_table(g));
          ASSERT_EQ(gcd_verdict, table_verdict)
              << "q=" << q << " n=" << n << " f=" << f.coefficients()[0]
              << " g=" << g.coefficients()[0];
        }
      }
    }
  }
}

TEST(SuperposedMap, Examples) {
  const LinearCaPair pair = make_linear_pair(lin(2, {1, 0, 1}), lin(2, {1, 1, 1}));
  const ca::Cells x{1, 0, 0, 1};
  const auto [fx, gx] = superposed_map(pair, x);
  EXPECT_EQ(fx, (ca::Cells{1, 1}));
  EXPECT_EQ(gx, (ca::Cells{1, 1}));
  const ca::Cells zero{0, 0, 0, 0};
  const auto [fz, gz] = superposed_map(pair, zero);
  EXPECT_EQ(fz, (ca::Cells{0, 0}));
  EXPECT_EQ(gz, (ca::Cells{0, 0}));
  EXPECT_THROW(superposed_map(pair, ca::Cells{1, 0}), ValidationError);
}

TEST(SuperposedMap, BijectiveIffOrthogonalD3) {
  const auto rules = test::all_linear_bipermutive(FieldSpec(2), 3);
  for (const LocalRule& f : rules) {
    for (const LocalRule& g : rules) {
      const LinearCaPair pair = make_linear_pair(f, g);
      std::set<std::pair<ca::Cells, ca::Cells>> images;
      for (std::size_t x = 0; x < 16; ++x) {
        ca::Cells input(4);
        for (std::size_t i = 0; i < 4; ++i) input[i] = static_cast<Elem>((x >> i) & 1);
        images.insert(superposed_map(pair, input));
      }
      EXPECT_EQ(images.size() == 16, are_orthogonal_linear(pair));
    }
  }
}

TEST(CountCoprimePairs, ClosedForm) {
  EXPECT_EQ(count_coprime_pairs(2, 1), 0u);
  EXPECT_EQ(count_coprime_pairs(2, 2), 1u);
  EXPECT_EQ(count_coprime_pairs(2, 3), 5u);
  EXPECT_EQ(count_coprime_pairs(2, 4), 21u);
  EXPECT_EQ(count_coprime_pairs(2, 5), 85u);
  EXPECT_EQ(count_coprime_pairs(3, 1), 1u);
  EXPECT_EQ(count_coprime_pairs(3, 2), 13u);
  EXPECT_EQ(count_coprime_pairs(3, 3), 121u);
}

TEST(EnumerateCoprimePairs, MatchesCountAndExamples) {
  const auto n2 = enumerate_coprime_pairs(2, 2);
  ASSERT_EQ(n2.size(), 1u);
  EXPECT_EQ(n2[0].first, gf::Polynomial(FieldSpec(2), {1, 0, 1}));
  EXPECT_EQ(n2[0].second, gf::Polynomial(FieldSpec(2), {1, 1, 1}));
  EXPECT_TRUE(enumerate_coprime_pairs(2, 1).empty());
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(enumerate_coprime_pairs(2, n).size(), count_coprime_pairs(2, n));
  }
  for (unsigned n = 1; n <= 3; ++n) {
    EXPECT_EQ(enumerate_coprime_pairs(3, n).size(), count_coprime_pairs(3, n));
  }
  EXPECT_THROW(enumerate_coprime_pairs(2, 30), ValidationError);
}

TEST(MaxFamily, SpecSizes) {
  const std::vector<std::size_t> sizes_q2{1, 2, 3, 5, 8};
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(max_family(2, n).size(), sizes_q2[n - 1]) << "n=" << n;
  }
  const std::vector<std::size_t> sizes_q3{2, 5, 10};
  for (unsigned n = 1; n <= 3; ++n) {
    EXPECT_EQ(max_family(3, n).size(), sizes_q3[n - 1]) << "n=" << n;
  }
}

TEST(MaxFamily, KnownSmallFamilies) {
  const FieldSpec f2(2);
  const MocaFamily n2 = max_family(2, 2);
  ASSERT_EQ(n2.size(), 2u);
  EXPECT_EQ(n2.polynomials[0], gf::Polynomial(f2, {1, 0, 1}));
  EXPECT_EQ(n2.polynomials[1], gf::Polynomial(f2, {1, 1, 1}));

  const MocaFamily n3 = max_family(2, 3);
  ASSERT_EQ(n3.size(), 3u);
  // {X^3+1, X^3+X+1, X^3+X^2+1}
  EXPECT_EQ(n3.polynomials[0], gf::Polynomial(f2, {1, 0, 0, 1}));
  EXPECT_EQ(n3.polynomials[1], gf::Polynomial(f2, {1, 1, 0, 1}));
  EXPECT_EQ(n3.polynomials[2], gf::Polynomial(f2, {1, 0, 1, 1}));
}

TEST(MaxFamily, CoprimeAndUnextendable) {
  for (const auto& [q, max_n] : std::vector<std::pair<Elem, unsigned>>{{2, 5}, {3, 3}}) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const MocaFamily family = max_family(q, n);
      EXPECT_TRUE(validate_family(family));
      // exhaustive: no further polynomial stays coprime to every member
      const gf::Polynomial one = gf::Polynomial::one(family.field);
      for (const gf::Polynomial& cand : bipermutive_polynomials(family.field, n)) {
        bool member = false;
        for (const gf::Polynomial& p : family.polynomials) member = member || p == cand;
        if (member) continue;
        bool coprime_to_all = true;
        for (const gf::Polynomial& p : family.polynomials) {
          coprime_to_all = coprime_to_all && poly_gcd(cand, p) == one;
        }
        EXPECT_FALSE(coprime_to_all)
            << "q=" << q << " n=" << n << " extension key " << cand.canonical_key();
      }
    }
  }
}

TEST(FamilyToMols, Examples) {
  const auto mols2 = family_to_mols(max_family(2, 2));
  ASSERT_EQ(mols2.size(), 2u);
  EXPECT_EQ(mols2[0].order, 4u);
  EXPECT_TRUE(designs::is_mols_family(mols2));

  const MocaFamily singleton{FieldSpec(2), 2, {gf::Polynomial(FieldSpec(2), {1, 1, 1})}};
  EXPECT_EQ(family_to_mols(singleton).size(), 1u);

  const auto mols3 = family_to_mols(max_family(2, 3));
  ASSERT_EQ(mols3.size(), 3u);
  EXPECT_EQ(mols3[0].order, 8u);
  EXPECT_TRUE(designs::is_mols_family(mols3));
}

TEST(FamilyToMols, RejectsInvalidFamily) {
  const FieldSpec f2(2);
  const MocaFamily bad{f2, 2,
                       {gf::Polynomial(f2, {1, 1, 1}), gf::Polynomial(f2, {1, 1, 1})}};
  EXPECT_THROW(family_to_mols(bad), ValidationError);
}

}  // namespace
}  // namespace moca::linear
