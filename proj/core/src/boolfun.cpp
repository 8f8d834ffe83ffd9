#include "moca/boolfun.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace moca::boolfun {

BooleanFunction make_function(unsigned n, std::vector<std::uint8_t> table) {
  if (n == 0 || n > 24) throw ValidationError("function arity out of supported range");
  if (table.size() != (std::size_t{1} << n)) {
    throw ValidationError("truth table must have 2^n entries");
  }
  for (std::uint8_t b : table) {
    if (b > 1) throw ValidationError("truth table entries must be bits");
  }
  return BooleanFunction{n, std::move(table)};
}

BooleanFunction from_rule(const ca::LocalRule& rule) {
  if (!rule.is_binary()) throw ValidationError("boolean view requires a binary rule");
  const unsigned d = rule.diameter();
  const std::vector<Elem> lex = rule.truth_table();
  std::vector<std::uint8_t> table(lex.size());
  for (std::size_t i = 0; i < lex.size(); ++i) {
    std::size_t rev = 0;
    for (unsigned j = 0; j < d; ++j) rev |= ((i >> j) & 1) << (d - 1 - j);
    table[i] = static_cast<std::uint8_t>(lex[rev]);
  }
  return BooleanFunction{d, std::move(table)};
}

std::vector<std::int64_t> walsh_transform(const BooleanFunction& f) {
  const std::size_t size = f.table.size();
  std::vector<std::int64_t> w(size);
  for (std::size_t i = 0; i < size; ++i) w[i] = f.table[i] ? -1 : 1;
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  return w;
}

std::uint64_t nonlinearity(const BooleanFunction& f) {
  std::int64_t maxabs = 0;
  for (std::int64_t v : walsh_transform(f)) maxabs = std::max(maxabs, v < 0 ? -v : v);
  return (f.table.size() - static_cast<std::uint64_t>(maxabs)) / 2;
}

bool is_bent(const BooleanFunction& f) {
  if (f.n % 2 != 0) return false;
  const std::int64_t flat = std::int64_t{1} << (f.n / 2);
  for (std::int64_t v : walsh_transform(f)) {
    if (v != flat && v != -flat) return false;
  }
  return true;
}

std::vector<std::size_t> support(const BooleanFunction& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (f.table[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::uint64_t> kernel_basis(const ca::LocalRule& rule) {
  if (!rule.is_linear() || !rule.is_binary()) {
    throw ValidationError("kernel basis requires a binary linear rule");
  }
  if (!rule.is_bipermutive()) throw ValidationError("kernel basis requires a bipermutive rule");
  const unsigned d = rule.diameter();
  const unsigned width = 2 * (d - 1);
  // Width-2(d-1) transition matrix rows: shifted copies of the coefficients.
  gf::FieldMatrix m(rule.field(), d - 1, width);
  for (unsigned r = 0; r < d - 1; ++r) {
    for (unsigned j = 0; j < d; ++j) m.at(r, r + j) = rule.coefficients()[j];
  }
  std::vector<std::uint64_t> basis;
  for (const std::vector<Elem>& v : gf::kernel_basis(m)) {
    std::uint64_t mask = 0;
    for (unsigned i = 0; i < width; ++i) mask |= static_cast<std::uint64_t>(v[i] & 1) << i;
    basis.push_back(mask);
  }
  return basis;
}

BooleanFunction bent_from_family(const linear::MocaFamily& family) {
  if (family.field.q() != 2) throw ValidationError("bent construction requires q = 2");
  const unsigned b = family.degree;
  if (b != 1 && b != 2) {
    throw ValidationError("bent construction exists only for polynomial degree 1 or 2");
  }
  if (family.size() != (std::size_t{1} << (b - 1))) {
    throw ValidationError("bent construction needs exactly 2^{b-1} polynomials");
  }
  if (!linear::validate_family(family)) throw ValidationError("invalid MOCA family");
  const unsigned n = 2 * b;
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  std::set<std::uint64_t> seen;  // pairwise-trivial intersection check
  for (const gf::Polynomial& p : family.polynomials) {
    const std::vector<std::uint64_t> basis = kernel_basis(ca::rule_from_polynomial(p));
    const std::size_t count = std::size_t{1} << basis.size();
    for (std::size_t pick = 1; pick < count; ++pick) {
      std::uint64_t x = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if ((pick >> i) & 1) x ^= basis[i];
      }
      if (!seen.insert(x).second) {
        throw ValidationError("kernel subspaces intersect beyond the origin");
      }
      table[x] = 1;
    }
  }
  return BooleanFunction{n, std::move(table)};
}

BooleanFunction ci_function_from_family(std::span<const ca::LocalRule> family,
                                        bool include_coordinates) {
  if (family.empty()) throw ValidationError("CI construction needs a nonempty family");
  for (const ca::LocalRule& rule : family) {
    if (!rule.is_binary()) throw ValidationError("CI construction requires binary rules");
  }
  std::vector<designs::LatinSquare> squares;
  squares.reserve(family.size());
  for (const ca::LocalRule& rule : family) squares.push_back(designs::cayley_table(rule));
  designs::SymbolMatrix array =
      include_coordinates ? designs::mols_to_oa(squares).matrix : designs::mols_entries_array(squares);
  const designs::SymbolMatrix bits = designs::binary_expand(array);
  const unsigned n = static_cast<unsigned>(bits.cols);
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (std::size_t r = 0; r < bits.rows; ++r) {
    std::size_t idx = 0;
    for (std::size_t c = 0; c < bits.cols; ++c) {
      idx |= static_cast<std::size_t>(bits.at(r, c)) << c;
    }
    table[idx] = 1;
  }
  return BooleanFunction{n, std::move(table)};
}

designs::SymbolMatrix support_matrix(const BooleanFunction& f) {
  const std::vector<std::size_t> supp = support(f);
  designs::SymbolMatrix m{supp.size(), f.n, 2, {}};
  m.cells.resize(m.rows * m.cols);
  for (std::size_t r = 0; r < supp.size(); ++r) {
    for (unsigned c = 0; c < f.n; ++c) {
      m.at(r, c) = static_cast<std::uint32_t>((supp[r] >> c) & 1);
    }
  }
  return m;
}

unsigned ci_order(const BooleanFunction& f, unsigned t_max) {
  const designs::SymbolMatrix m = support_matrix(f);
  if (m.rows == 0) return std::min(t_max, f.n);  // vacuous
  return designs::oa_strength(m, std::min(t_max, f.n));
}

bool is_correlation_immune(const BooleanFunction& f, unsigned t) {
  if (t > f.n) throw ValidationError("immunity order exceeds the variable count");
  if (t == 0) return true;
  return ci_order(f, t) >= t;
}

std::string table_to_hex(const BooleanFunction& f) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve((f.table.size() + 3) / 4);
  for (std::size_t i = 0; i < f.table.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4 && i + j < f.table.size(); ++j) {
      nibble |= static_cast<unsigned>(f.table[i + j]) << j;
    }
    out.push_back(digits[nibble]);
  }
  return out;
}

BooleanFunction table_from_hex(unsigned n, const std::string& hex) {
  const std::size_t size = std::size_t{1} << n;
  if (hex.size() != (size + 3) / 4) throw ValidationError("hex table length mismatch");
  std::vector<std::uint8_t> table(size, 0);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char ch = hex[i];
    unsigned nibble;
    if (ch >= '0' && ch <= '9') {
      nibble = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      nibble = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw ValidationError("invalid hex digit in truth table");
    }
    for (std::size_t j = 0; j < 4 && i * 4 + j < size; ++j) {
      table[i * 4 + j] = (nibble >> j) & 1;
    }
  }
  return BooleanFunction{n, std::move(table)};
}

}  // namespace moca::boolfun
