#include "moca/linear_moca.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace moca::linear {

LinearCaPair make_linear_pair(ca::LocalRule f, ca::LocalRule g) {
  if (!f.is_linear() || !g.is_linear()) {
    throw ValidationError("linear pair requires linear rules");
  }
  if (!(f.field() == g.field())) throw ValidationError("linear pair field mismatch");
  if (f.diameter() != g.diameter()) throw ValidationError("linear pair diameter mismatch");
  if (!f.is_bipermutive() || !g.is_bipermutive()) {
    throw ValidationError("linear pair requires bipermutive rules");
  }
  return LinearCaPair{std::move(f), std::move(g)};
}

bool are_orthogonal_linear(const LinearCaPair& pair) {
  const Polynomial one = Polynomial::one(pair.f.field());
  return poly_gcd(associated_polynomial(pair.f), associated_polynomial(pair.g)) == one;
}

bool are_orthogonal_linear(const ca::LocalRule& f, const ca::LocalRule& g) {
  return are_orthogonal_linear(make_linear_pair(f, g));
}

std::pair<Cells, Cells> superposed_map(const LinearCaPair& pair, std::span<const Elem> x) {
  const unsigned d = pair.f.diameter();
  if (x.size() != 2 * (d - 1)) {
    throw ValidationError("superposed map input must have 2(d-1) cells");
  }
  return {ca::evaluate(pair.f, x), ca::evaluate(pair.g, x)};
}

gf::FieldMatrix pair_sylvester(const LinearCaPair& pair) {
  return gf::sylvester_matrix(pair.f.field(), pair.f.coefficients(), pair.g.coefficients());
}

std::uint64_t count_coprime_pairs(Elem q, unsigned n) {
  if (n == 0) throw ValidationError("degree must be >= 1");
  const std::uint64_t Q = q;
  gf::pow_u64(Q, 2 * n);  // overflow guard for the terms below
  // geometric series (q^{2n-2} - 1)/(q^2 - 1) = sum_{i<n-1} q^{2i}
  std::uint64_t series = 0, term = 1;
  for (unsigned i = 0; i + 1 < n; ++i) {
    series += term;
    term *= Q * Q;
  }
  const std::uint64_t qm1 = Q - 1;
  if (series > 0 && Q * qm1 * qm1 * qm1 > UINT64_MAX / series) {
    throw ValidationError("coprime pair count exceeds 64-bit range");
  }
  return (Q * qm1 * qm1 * qm1 * series + qm1 * (Q - 2)) / 2;
}

std::vector<Polynomial> bipermutive_polynomials(FieldSpec field, unsigned n) {
  if (n == 0) throw ValidationError("degree must be >= 1");
  const Elem q = field.q();
  const std::uint64_t count = gf::pow_u64(q, n);
  std::vector<Polynomial> out;
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<Elem> c(n + 1);
    std::uint64_t v = t;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = static_cast<Elem>(v % q);
      v /= q;
    }
    if (c[0] == 0) continue;
    c[n] = 1;
    out.emplace_back(field, std::move(c));
  }
  return out;
}

std::vector<std::pair<Polynomial, Polynomial>> enumerate_coprime_pairs(Elem q, unsigned n) {
  if (gf::pow_u64(q, n) > (std::uint64_t{1} << 16)) {
    throw ValidationError("coprime pair enumeration guarded to q^n <= 2^16");
  }
  const FieldSpec field(q);
  const std::vector<Polynomial> polys = bipermutive_polynomials(field, n);
  const Polynomial one = Polynomial::one(field);
  std::vector<std::pair<Polynomial, Polynomial>> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (poly_gcd(polys[i], polys[j]) == one) {
        out.emplace_back(polys[i], polys[j]);
      }
    }
  }
  return out;
}

MocaFamily max_family(Elem q, unsigned n) {
  if (n == 0) throw ValidationError("degree must be >= 1");
  const FieldSpec field(q);
  MocaFamily family{field, n, {}};
  for (Polynomial& p : gf::irreducibles(field, n, /*nonzero_constant=*/true)) {
    family.polynomials.push_back(std::move(p));
  }
  // One degree-n companion per irreducible of degree k <= n/2 (X excluded).
  // k = n/2 squares the irreducible; k < n/2 multiplies by a fresh irreducible
  // of degree n-k, whose factors are too large to own a slot of their own, so
  // pairwise coprimality is preserved by construction.
  std::set<std::uint64_t> used_cofactors;
  for (unsigned k = n / 2; k >= 1; --k) {
    std::vector<Polynomial> small = gf::irreducibles(field, k, /*nonzero_constant=*/true);
    for (const Polynomial& p : small) {
      if (2 * k == n) {
        family.polynomials.push_back(p * p);
        continue;
      }
      bool placed = false;
      for (const Polynomial& r : gf::irreducibles(field, n - k)) {
        if (r.constant_term() == 0) continue;
        if (!used_cofactors.insert(r.canonical_key()).second) continue;
        family.polynomials.push_back(p * r);
        placed = true;
        break;
      }
      if (!placed) {
        throw ValidationError("max_family ran out of cofactors at degree " + std::to_string(k));
      }
    }
  }
  std::sort(family.polynomials.begin(), family.polynomials.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return a.canonical_key() < b.canonical_key();
            });
  return family;
}

bool validate_family(const MocaFamily& family) {
  const Polynomial one = Polynomial::one(family.field);
  for (const Polynomial& p : family.polynomials) {
    if (!p.is_monic() || p.degree() != static_cast<int>(family.degree) ||
        p.constant_term() == 0) {
      return false;
    }
  }
  for (std::size_t i = 0; i < family.polynomials.size(); ++i) {
    for (std::size_t j = i + 1; j < family.polynomials.size(); ++j) {
      if (!(poly_gcd(family.polynomials[i], family.polynomials[j]) == one)) return false;
    }
  }
  return true;
}

std::vector<ca::LocalRule> family_rules(const MocaFamily& family) {
  if (!validate_family(family)) throw ValidationError("invalid MOCA family");
  std::vector<ca::LocalRule> rules;
  rules.reserve(family.polynomials.size());
  for (const Polynomial& p : family.polynomials) {
    rules.push_back(ca::rule_from_polynomial(p));
  }
  return rules;
}

std::vector<designs::LatinSquare> family_to_mols(const MocaFamily& family) {
  std::vector<designs::LatinSquare> squares;
  for (const ca::LocalRule& rule : family_rules(family)) {
    squares.push_back(designs::cayley_table(rule));
  }
  return squares;
}

}  // namespace moca::linear
