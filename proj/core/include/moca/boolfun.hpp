#ifndef MOCA_BOOLFUN_HPP
#define MOCA_BOOLFUN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moca/linear_moca.hpp"

namespace moca::boolfun {

using gf::Elem;

/// Boolean function of n variables as a 2^n-bit truth table. The input index
/// follows the block codec: x1 is the least significant bit.
struct BooleanFunction {
  unsigned n = 0;
  std::vector<std::uint8_t> table;

  std::size_t size() const noexcept { return table.size(); }
};

BooleanFunction make_function(unsigned n, std::vector<std::uint8_t> table);

/// Reindex a binary local rule's lexicographic table to the codec convention.
BooleanFunction from_rule(const ca::LocalRule& rule);

/// Exact integer spectrum W_f(a) = sum_x (-1)^{f(x) + a.x}.
std::vector<std::int64_t> walsh_transform(const BooleanFunction& f);

/// 2^{n-1} - max|W_f| / 2.
std::uint64_t nonlinearity(const BooleanFunction& f);

/// n even and |W_f(a)| = 2^{n/2} everywhere.
bool is_bent(const BooleanFunction& f);

std::vector<std::size_t> support(const BooleanFunction& f);

/// Basis of {x : F(x) = 0} for the width-2(d-1) map of a linear bipermutive
/// binary rule, as codec-indexed bitmasks; dimension d-1.
std::vector<std::uint64_t> kernel_basis(const ca::LocalRule& rule);

/// Partial-spread bent function on 2b variables from a coprime family of
/// degree b in {1, 2} and size 2^{b-1}: the indicator of the union of the CA
/// kernels minus the origin.
BooleanFunction bent_from_family(const linear::MocaFamily& family);

/// Support equals the binary expansion of the family's orthogonal array.
/// With coordinates (default) the array is the (k+2)-column MOLS equivalent
/// on (k+2)(d-1) variables; without, the k entry columns on k(d-1) variables.
BooleanFunction ci_function_from_family(std::span<const ca::LocalRule> family,
                                        bool include_coordinates = true);

/// Support rows as a binary matrix, one row per support element.
designs::SymbolMatrix support_matrix(const BooleanFunction& f);

/// Largest t <= t_max with the support a binary OA of strength t.
unsigned ci_order(const BooleanFunction& f, unsigned t_max);

/// Support criterion; an empty support is vacuously immune.
bool is_correlation_immune(const BooleanFunction& f, unsigned t);

/// Hex serialization of the truth table, least significant bit first.
std::string table_to_hex(const BooleanFunction& f);
BooleanFunction table_from_hex(unsigned n, const std::string& hex);

}  // namespace moca::boolfun

#endif
