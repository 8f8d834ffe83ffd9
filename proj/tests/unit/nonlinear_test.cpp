#include <gtest/gtest.h>

#include <set>

#include "moca/boolfun.hpp"
#include "moca/nonlinear_moca.hpp"
#include "oracles.hpp"

namespace moca::nonlinear {
namespace {

using ca::LocalRule;
using gf::Elem;

LocalRule wolfram(unsigned d, std::uint64_t code) { return LocalRule::from_wolfram(d, code); }

std::set<std::pair<std::uint64_t, std::uint64_t>> brute_orthogonal_pairs(unsigned d) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  const auto rules = test::all_binary_bipermutive(d);
  for (const LocalRule& f : rules) {
    for (const LocalRule& g : rules) {
      if (f == g) continue;
      if (test::brute_orthogonal(designs::cayley_table(f), designs::cayley_table(g))) {
        out.insert({f.wolfram(), g.wolfram()});
      }
    }
  }
  return out;
}

TEST(IsPairwiseBalanced, Examples) {
  EXPECT_TRUE(is_pairwise_balanced(wolfram(3, 90), wolfram(3, 150)));
  EXPECT_FALSE(is_pairwise_balanced(wolfram(3, 150), wolfram(3, 150)));
  EXPECT_FALSE(is_pairwise_balanced(wolfram(3, 90), wolfram(3, 165)));
  EXPECT_THROW(is_pairwise_balanced(wolfram(3, 90), wolfram(4, 150 * 256 + 150)),
               ValidationError);
}

TEST(GeneratingCondition, Examples) {
  // phi = 0, gamma = id at d = 3 (inducing rules 90 and 150): true
  EXPECT_TRUE(generating_condition(ca::Cells{0, 0}, ca::Cells{0, 1}));
  EXPECT_FALSE(generating_condition(ca::Cells{0, 1}, ca::Cells{0, 1}));
  EXPECT_THROW(generating_condition(ca::Cells{0}, ca::Cells{0, 1}), ValidationError);
}

TEST(GeneratingCondition, SufficiencyExhaustiveD4) {
  // whenever the condition holds, the induced rules are pairwise balanced
  for (std::uint32_t phi = 0; phi < 16; ++phi) {
    for (std::uint32_t gamma = 0; gamma < 16; ++gamma) {
      ca::Cells pt(4), gt(4);
      for (unsigned i = 0; i < 4; ++i) {
        pt[i] = (phi >> i) & 1;
        gt[i] = (gamma >> i) & 1;
      }
      const bool condition = generating_condition(pt, gt);
      const bool balanced = is_pairwise_balanced(LocalRule::from_generating(4, pt),
                                                 LocalRule::from_generating(4, gt));
      EXPECT_EQ(condition, balanced);  // the condition is exact
    }
  }
}

TEST(CountPairwiseBalanced, BruteForceAndFormula) {
  // d=3: brute force over all 16 ordered bipermutive pairs
  std::size_t brute3 = 0;
  for (const LocalRule& f : test::all_binary_bipermutive(3)) {
    for (const LocalRule& g : test::all_binary_bipermutive(3)) {
      brute3 += is_pairwise_balanced(f, g);
    }
  }
  EXPECT_EQ(brute3, 8u);
  EXPECT_EQ(count_pairwise_balanced(3), 8u);

  std::size_t brute4 = 0;
  for (const LocalRule& f : test::all_binary_bipermutive(4)) {
    for (const LocalRule& g : test::all_binary_bipermutive(4)) {
      brute4 += is_pairwise_balanced(f, g);
    }
  }
  EXPECT_EQ(brute4, 96u);
  EXPECT_EQ(count_pairwise_balanced(4), 96u);

  EXPECT_EQ(count_pairwise_balanced(5), 17920u);
  EXPECT_THROW(count_pairwise_balanced(2), ValidationError);
}

TEST(EnumeratePairwiseBalanced, D3CompleteWithKnownPair) {
  const auto pairs = enumerate_pairwise_balanced(3);
  EXPECT_EQ(pairs.size(), 8u);
  bool has_90_150 = false;
  for (const RulePair& p : pairs) {
    EXPECT_TRUE(is_pairwise_balanced(p.f, p.g));
    has_90_150 = has_90_150 || (p.f.wolfram() == 90 && p.g.wolfram() == 150);
  }
  EXPECT_TRUE(has_90_150);
}

TEST(EnumeratePairwiseBalanced, CompletenessD3D4) {
  for (unsigned d = 3; d <= 4; ++d) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> brute;
    for (const LocalRule& f : test::all_binary_bipermutive(d)) {
      for (const LocalRule& g : test::all_binary_bipermutive(d)) {
        if (is_pairwise_balanced(f, g)) brute.insert({f.wolfram(), g.wolfram()});
      }
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> enumerated;
    for (const RulePair& p : enumerate_pairwise_balanced(d)) {
      EXPECT_TRUE(enumerated.insert({p.f.wolfram(), p.g.wolfram()}).second)
          << "duplicate code emitted";
    }
    EXPECT_EQ(enumerated, brute);
  }
}

TEST(EnumeratePairwiseBalanced, CountAndBalanceAtD5) {
  std::size_t count = 0;
  for_each_pairwise_balanced(5, [&](const RulePair& p) {
    if (count % 997 == 0) {  // spot-check balance on a sample
      EXPECT_TRUE(is_pairwise_balanced(p.f, p.g));
    }
    ++count;
  });
  EXPECT_EQ(count, 17920u);
  EXPECT_THROW(enumerate_pairwise_balanced(7), ValidationError);
}

TEST(BalancedPairCode, RankRoundTrip) {
  for (unsigned d = 3; d <= 5; ++d) {
    const std::uint64_t total = balanced_code_count(d);
    const unsigned m = 1u << (d - 2);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      const BalancedPairCode code = code_at(d, rank);
      EXPECT_EQ(__builtin_popcount(code.component_types), m / 2);
      EXPECT_TRUE(seen.insert({code.component_types, code.orientations}).second);
    }
    EXPECT_THROW(code_at(d, total), ValidationError);
  }
}

TEST(SearchOrthogonal, D3AllAffine) {
  const auto results = search_orthogonal(3);
  EXPECT_EQ(results.size(), 8u);
  for (const SearchResult& r : results) {
    EXPECT_EQ(r.nonlinearity_f, 0u);
    EXPECT_EQ(r.nonlinearity_g, 0u);
  }
  SearchOptions nl_only;
  nl_only.nonlinear_only = true;
  EXPECT_TRUE(search_orthogonal(3, nl_only).empty());
}

TEST(SearchOrthogonal, MatchesBruteForceD3D4) {
  for (unsigned d = 3; d <= 4; ++d) {
    const auto brute = brute_orthogonal_pairs(d);
    std::set<std::pair<std::uint64_t, std::uint64_t>> found;
    for (const SearchResult& r : search_orthogonal(d)) {
      EXPECT_TRUE(found.insert({r.wolfram_f, r.wolfram_g}).second);
    }
    EXPECT_EQ(found, brute);
  }
}

TEST(SearchOrthogonal, Lemma42NecessityExhaustive) {
  // every orthogonal pair of bipermutive rules is pairwise balanced (d <= 4)
  for (unsigned d = 3; d <= 4; ++d) {
    for (const auto& [wf, wg] : brute_orthogonal_pairs(d)) {
      EXPECT_TRUE(is_pairwise_balanced(wolfram(d, wf), wolfram(d, wg)));
    }
  }
}

TEST(SearchOrthogonal, ResultsVerifyAndCertify) {
  SearchOptions nl_only;
  nl_only.nonlinear_only = true;
  const auto results = search_orthogonal(4, nl_only);
  EXPECT_FALSE(results.empty());
  for (const SearchResult& r : results) {
    const LocalRule f = wolfram(4, r.wolfram_f);
    const LocalRule g = wolfram(4, r.wolfram_g);
    EXPECT_TRUE(are_orthogonal_rules(f, g));
    EXPECT_TRUE(is_pairwise_balanced(f, g));
    EXPECT_GT(boolfun::nonlinearity(boolfun::from_rule(f)), 0u);
    EXPECT_GT(boolfun::nonlinearity(boolfun::from_rule(g)), 0u);
    EXPECT_EQ(r.nonlinearity_f, boolfun::nonlinearity(boolfun::from_rule(f)));
    EXPECT_EQ(r.certificate, orthogonality_certificate(f, g));
  }
}

TEST(SearchOrthogonal, ClosedUnderSwap) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> found;
  for (const SearchResult& r : search_orthogonal(4)) {
    found.insert({r.wolfram_f, r.wolfram_g});
  }
  for (const auto& [wf, wg] : found) {
    EXPECT_TRUE(found.count({wg, wf})) << wf << "," << wg;
  }
}

TEST(SearchOrthogonal, ThreadCountDoesNotChangeOutput) {
  SearchOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = search_orthogonal(4, one);
  const auto b = search_orthogonal(4, four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].rank, b[i].rank);
    EXPECT_EQ(a[i].wolfram_f, b[i].wolfram_f);
    EXPECT_EQ(a[i].wolfram_g, b[i].wolfram_g);
    EXPECT_EQ(a[i].certificate, b[i].certificate);
  }
}

TEST(SearchOrthogonal, RankRangesPartitionTheSearch) {
  const std::uint64_t total = balanced_code_count(4);
  SearchOptions lo, hi;
  lo.last_rank = total / 3;
  hi.first_rank = total / 3;
  const auto combined = search_orthogonal(4);
  auto part1 = search_orthogonal(4, lo);
  const auto part2 = search_orthogonal(4, hi);
  part1.insert(part1.end(), part2.begin(), part2.end());
  ASSERT_EQ(part1.size(), combined.size());
  for (std::size_t i = 0; i < combined.size(); ++i) {
    EXPECT_EQ(part1[i].rank, combined[i].rank);
  }
}

TEST(SearchOrthogonal, GuardsDiameter) {
  EXPECT_THROW(search_orthogonal(2), ValidationError);
  EXPECT_THROW(search_orthogonal(7), ValidationError);
}

}  // namespace
}  // namespace moca::nonlinear
