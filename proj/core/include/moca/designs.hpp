#ifndef MOCA_DESIGNS_HPP
#define MOCA_DESIGNS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "moca/ca.hpp"

namespace moca::designs {

using ca::Cells;
using gf::Elem;
using gf::FieldSpec;

/// Bijection between (d-1)-cell blocks and 0..q^{d-1}-1, leftmost cell least
/// significant: encode(10) = 1, encode(01) = 2 over F_2. Display adds one,
/// matching phi(00)=1, phi(10)=2, phi(01)=3, phi(11)=4.
class BlockIndexCodec {
 public:
  BlockIndexCodec(FieldSpec field, unsigned block_len);

  const FieldSpec& field() const noexcept { return field_; }
  unsigned block_len() const noexcept { return block_len_; }
  std::size_t size() const noexcept { return size_; }

  std::size_t encode(std::span<const Elem> block) const;
  Cells decode(std::size_t index) const;

 private:
  FieldSpec field_;
  unsigned block_len_;
  std::size_t size_;
};

/// Square matrix over 0..order-1, row-major. Entries are 0-based internally;
/// printing and serialization are 1-based.
struct LatinSquare {
  std::size_t order = 0;
  std::vector<std::uint32_t> cells;

  std::uint32_t at(std::size_t i, std::size_t j) const { return cells[i * order + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return cells[i * order + j]; }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
};

bool is_latin_square(const LatinSquare& m);

/// Cayley table of a bipermutive rule: entry (i,j) =
/// encode(F(decode(i) || decode(j))), order q^{d-1}.
LatinSquare cayley_table(const ca::LocalRule& rule);

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Pairwise orthogonality of a nonempty family of equal order.
bool is_mols_family(std::span<const LatinSquare> squares);

/// Row-major matrix with entries in 0..symbols-1.
struct SymbolMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint32_t symbols = 0;
  std::vector<std::uint32_t> cells;

  std::uint32_t at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
};

struct OrthogonalArray {
  SymbolMatrix matrix;
  unsigned strength = 0;
  std::size_t index = 0;  // lambda = rows / symbols^strength
};

/// Largest t <= t_max such that every t-column projection is lambda-uniform
/// (0 when even single columns are skewed).
unsigned oa_strength(const SymbolMatrix& m, unsigned t_max);

/// The strength-2, index-1 orthogonal array equivalent to k MOLS of order s:
/// s^2 rows (i, j, L_1(i,j), ..., L_k(i,j)). Verified before returning.
OrthogonalArray mols_to_oa(std::span<const LatinSquare> squares);

/// k-column variant without the two coordinate columns: rows
/// (L_1(i,j), ..., L_k(i,j)) over all cells.
SymbolMatrix mols_entries_array(std::span<const LatinSquare> squares);

/// Replace each symbol of an array over 2^n symbols by its n-bit block
/// (codec convention, least significant bit first).
SymbolMatrix binary_expand(const SymbolMatrix& m);

}  // namespace moca::designs

#endif
