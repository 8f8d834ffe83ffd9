#ifndef MOCA_RULE_HPP
#define MOCA_RULE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "moca/poly.hpp"

namespace moca::ca {

using gf::Elem;
using gf::FieldSpec;

/// One CA configuration: cells left to right, each in 0..q-1.
using Cells = std::vector<Elem>;

/// Local rule of diameter d over F_q. Either a linear combination of the
/// neighborhood (any prime q) or an explicit binary truth table.
///
/// Truth tables are stored in lexicographic input order with the leftmost
/// cell as the most significant bit, so rule 150 reads 0,1,1,0,1,0,0,1 for
/// inputs 000..111 and the Wolfram code is the usual bottom-up decimal.
class LocalRule {
 public:
  static LocalRule linear(FieldSpec field, std::vector<Elem> coeffs);
  static LocalRule table(unsigned diameter, std::vector<Elem> bits);
  static LocalRule from_wolfram(unsigned diameter, std::uint64_t code);
  /// Bipermutive rule x1 XOR g(x2..x_{d-1}) XOR xd from the truth table of g
  /// (lexicographic order, x2 most significant). d = 2 takes g constant zero,
  /// given either as {} or {0}.
  static LocalRule from_generating(unsigned diameter, std::vector<Elem> g_bits);

  const FieldSpec& field() const noexcept { return field_; }
  unsigned diameter() const noexcept { return diameter_; }
  bool is_linear() const noexcept { return linear_; }
  bool is_binary() const noexcept { return field_.q() == 2; }

  /// Linear coefficients a_1..a_d; throws on table rules.
  const std::vector<Elem>& coefficients() const;
  /// Truth table in lexicographic order; throws on non-binary linear rules
  /// (binary linear rules are materialized on demand).
  std::vector<Elem> truth_table() const;
  std::uint64_t wolfram() const;

  Elem apply(std::span<const Elem> window) const;

  bool leftmost_permutive() const;
  bool rightmost_permutive() const;
  bool is_bipermutive() const;

  /// Truth table of the generating function g (binary bipermutive rules only).
  std::vector<Elem> generating_table() const;

  friend bool operator==(const LocalRule& a, const LocalRule& b);

 private:
  LocalRule(FieldSpec field, unsigned diameter, bool linear, std::vector<Elem> data);

  FieldSpec field_;
  unsigned diameter_;
  bool linear_;
  std::vector<Elem> data_;  // coefficients or table bits
};

/// p_f(X) = a_1 + a_2 X + ... + a_d X^{d-1}; linear rules only.
gf::Polynomial associated_polynomial(const LocalRule& rule);

/// Linear rule whose coefficients are the polynomial's, padded to diameter
/// p.degree()+1 (the spec's reading of a monic degree-n polynomial as a
/// diameter-(n+1) rule).
LocalRule rule_from_polynomial(const gf::Polynomial& p);

}  // namespace moca::ca

#endif
