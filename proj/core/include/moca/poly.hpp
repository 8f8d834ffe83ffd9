#ifndef MOCA_POLY_HPP
#define MOCA_POLY_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "moca/field.hpp"

namespace moca::gf {

/// Univariate polynomial over a prime field. Coefficients are stored in
/// ascending degree with no trailing zeros; the zero polynomial has an empty
/// coefficient vector.
class Polynomial {
 public:
  Polynomial(FieldSpec field, std::vector<Elem> coeffs);

  static Polynomial zero(FieldSpec field) { return Polynomial(field, {}); }
  static Polynomial one(FieldSpec field) { return Polynomial(field, {1}); }
  static Polynomial x(FieldSpec field) { return Polynomial(field, {0, 1}); }

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem constant_term() const noexcept { return coeff(0); }
  Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const noexcept { return leading() == 1; }

  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical key: coefficients read as a base-q integer, constant term least
  /// significant. Orders enumerations deterministically.
  std::uint64_t canonical_key() const;

 private:
  FieldSpec field_;
  std::vector<Elem> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

bool divides(const Polynomial& d, const Polynomial& a);

/// Monic greatest common divisor. Inputs must share a field and not both be zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// a^e mod m.
Polynomial poly_powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m);

bool is_irreducible(const Polynomial& p);

/// All monic irreducible polynomials of degree k, in canonical ascending
/// order. With nonzero_constant set, polynomials with zero constant term are
/// dropped (of which X is the only one).
std::vector<Polynomial> irreducibles(FieldSpec field, unsigned k, bool nonzero_constant = false);

/// True iff a root of p generates the multiplicative group of F_{q^deg}.
/// p must be monic irreducible with nonzero constant term; reducible input
/// throws. Decided by the order of the companion matrix root against the
/// trial-division factorization of q^deg - 1.
bool is_primitive(const Polynomial& p);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace moca::gf

#endif
