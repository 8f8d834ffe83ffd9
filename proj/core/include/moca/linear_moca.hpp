#ifndef MOCA_LINEAR_MOCA_HPP
#define MOCA_LINEAR_MOCA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "moca/designs.hpp"
#include "moca/matrix.hpp"

namespace moca::linear {

using ca::Cells;
using gf::Elem;
using gf::FieldSpec;
using gf::Polynomial;

/// Two linear bipermutive rules of equal diameter and field. Construction
/// validates the invariants; orthogonality is not implied.
struct LinearCaPair {
  ca::LocalRule f;
  ca::LocalRule g;
};

LinearCaPair make_linear_pair(ca::LocalRule f, ca::LocalRule g);

/// gcd criterion: the Cayley tables are orthogonal iff gcd(p_f, p_g) = 1.
bool are_orthogonal_linear(const LinearCaPair& pair);
bool are_orthogonal_linear(const ca::LocalRule& f, const ca::LocalRule& g);

/// H(x) = (F(x), G(x)) on inputs of exactly 2(d-1) cells.
std::pair<Cells, Cells> superposed_map(const LinearCaPair& pair, std::span<const Elem> x);

gf::FieldMatrix pair_sylvester(const LinearCaPair& pair);

/// Closed form for the number of unordered pairs of distinct coprime monic
/// degree-n polynomials with nonzero constant term.
std::uint64_t count_coprime_pairs(Elem q, unsigned n);

/// All monic degree-n polynomials with nonzero constant term, canonical order.
std::vector<Polynomial> bipermutive_polynomials(FieldSpec field, unsigned n);

/// Exhaustive enumeration matching count_coprime_pairs; guarded on q^n.
std::vector<std::pair<Polynomial, Polynomial>> enumerate_coprime_pairs(Elem q, unsigned n);

/// Maximal family of pairwise coprime monic degree-n polynomials with nonzero
/// constant term.
struct MocaFamily {
  FieldSpec field;
  unsigned degree;  // n = d - 1
  std::vector<Polynomial> polynomials;

  std::size_t size() const noexcept { return polynomials.size(); }
};

/// Iterative construction: all irreducibles of degree n; for each irreducible
/// of degree k < n/2 one product with a fresh irreducible of degree n-k; for
/// even n the squares of the degree-n/2 irreducibles. Size is
/// N_n = I_n + sum_{k<=n/2} I_k with I_1 = q-1 (X excluded).
MocaFamily max_family(Elem q, unsigned n);

/// Pairwise coprime, monic, degree exactly n, nonzero constant terms.
bool validate_family(const MocaFamily& family);

std::vector<ca::LocalRule> family_rules(const MocaFamily& family);
std::vector<designs::LatinSquare> family_to_mols(const MocaFamily& family);

}  // namespace moca::linear

#endif
