#ifndef MOCA_MATRIX_HPP
#define MOCA_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "moca/poly.hpp"

namespace moca::gf {

/// Dense row-major matrix over a prime field.
class FieldMatrix {
 public:
  FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static FieldMatrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Elem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Elem& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Elem>& entries() const noexcept { return entries_; }

  FieldMatrix mul(const FieldMatrix& other) const;
  std::vector<Elem> apply(std::span<const Elem> x) const;
  FieldMatrix pow(std::uint64_t e) const;
  bool is_identity() const noexcept;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Elem> entries_;
};

/// The 2(d-1) x 2(d-1) Sylvester-style superposition of two coefficient
/// vectors of equal length d >= 2: d-1 shifted copies of a stacked over d-1
/// shifted copies of b. Invertible iff the associated polynomials are coprime.
FieldMatrix sylvester_matrix(FieldSpec field, std::span<const Elem> a, std::span<const Elem> b);

/// Gauss-Jordan inverse; nullopt on singular input, throws on non-square.
std::optional<FieldMatrix> matrix_invert(const FieldMatrix& m);

/// Solve m*x = rhs for square invertible m; nullopt when singular.
std::optional<std::vector<Elem>> matrix_solve(const FieldMatrix& m, std::span<const Elem> rhs);

/// Monic polynomial of least degree annihilating m.
Polynomial minimal_polynomial(const FieldMatrix& m);

/// Least e >= 1 with m^e = I, via the multiplicative order of X modulo the
/// minimal polynomial; nullopt when m is singular. The cap bounds the search.
std::optional<std::uint64_t> matrix_order(const FieldMatrix& m,
                                          std::uint64_t cap = std::uint64_t{1} << 32);

FieldMatrix companion_matrix(const Polynomial& p);

/// Basis of the right kernel {x : m x = 0}, echelon form.
std::vector<std::vector<Elem>> kernel_basis(const FieldMatrix& m);

std::size_t matrix_rank(const FieldMatrix& m);

}  // namespace moca::gf

#endif
