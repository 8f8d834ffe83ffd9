#ifndef MOCA_NONLINEAR_MOCA_HPP
#define MOCA_NONLINEAR_MOCA_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "moca/designs.hpp"

namespace moca::nonlinear {

using gf::Elem;

/// Ordered pair of binary bipermutive rules of equal diameter.
struct RulePair {
  ca::LocalRule f;
  ca::LocalRule g;
};

RulePair make_rule_pair(ca::LocalRule f, ca::LocalRule g);

/// Each of the four output pairs of x -> (f(x), g(x)) occurs exactly 2^{d-2}
/// times.
bool is_pairwise_balanced(const ca::LocalRule& f, const ca::LocalRule& g);

/// Condition on the generating functions phi, gamma (truth tables over d-2
/// variables): the superposed pair map is balanced, which reduces to
/// phi XOR gamma having equal numbers of zeros and ones. Exactly characterizes
/// pairwise balancedness of the induced bipermutive rules.
bool generating_condition(std::span<const Elem> phi, std::span<const Elem> gamma);

/// Ordered count C(2^{d-2}, 2^{d-3}) * 2^{2^{d-2}}; requires d >= 3.
std::uint64_t count_pairwise_balanced(unsigned d);

/// Enumerative code for a pairwise balanced bipermutive pair: one component
/// per generating-function input t. component_types bit t set means the
/// component carries the mixed labels (0,1)/(1,0); orientations bit t is
/// phi(t). Decoding gives phi = orientations, gamma = orientations XOR types.
struct BalancedPairCode {
  unsigned diameter = 3;
  std::uint32_t component_types = 0;  // 2^{d-2} bits, exactly 2^{d-3} ones
  std::uint32_t orientations = 0;     // 2^{d-2} bits
};

RulePair decode(const BalancedPairCode& code);

std::uint64_t balanced_code_count(unsigned d);

/// Code at a given rank in the canonical enumeration (types by ascending
/// bitmask value among fixed-weight masks, orientations as the low index).
BalancedPairCode code_at(unsigned d, std::uint64_t rank);

/// Visit every pairwise balanced ordered pair exactly once, in rank order.
/// Guarded to 3 <= d <= 6.
void for_each_pairwise_balanced(unsigned d, const std::function<void(const RulePair&)>& visit);

/// Materialized enumeration (small d convenience).
std::vector<RulePair> enumerate_pairwise_balanced(unsigned d);

struct SearchResult {
  std::uint64_t rank = 0;  // enumeration rank of the code
  std::uint64_t wolfram_f = 0;
  std::uint64_t wolfram_g = 0;
  std::uint64_t nonlinearity_f = 0;
  std::uint64_t nonlinearity_g = 0;
  std::uint64_t certificate = 0;  // FNV-1a over the superposed Cayley entries
};

struct SearchOptions {
  bool nonlinear_only = false;
  unsigned threads = 1;
  std::uint64_t first_rank = 0;               // inclusive
  std::uint64_t last_rank = UINT64_MAX;       // exclusive, clamped to the code count
};

/// All ordered pairwise balanced pairs whose Cayley tables are orthogonal,
/// in rank order; with nonlinear_only both rules must have nonzero
/// nonlinearity. Deterministic for any thread count.
std::vector<SearchResult> search_orthogonal(unsigned d, const SearchOptions& options = {});

/// Orthogonality of two bipermutive rules by the pair histogram of the
/// superposed Cayley tables, aborting on the first repeat.
bool are_orthogonal_rules(const ca::LocalRule& f, const ca::LocalRule& g);

/// FNV-1a 64 over the row-major superposition (pairs of entries) of the two
/// Cayley tables.
std::uint64_t orthogonality_certificate(const ca::LocalRule& f, const ca::LocalRule& g);

}  // namespace moca::nonlinear

#endif
