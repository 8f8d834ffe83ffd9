#include "moca/designs.hpp"

#include <algorithm>
#include <string>

namespace moca::designs {

BlockIndexCodec::BlockIndexCodec(FieldSpec field, unsigned block_len)
    : field_(field), block_len_(block_len), size_(gf::pow_u64(field.q(), block_len)) {
  if (block_len == 0) throw ValidationError("block length must be >= 1");
}

std::size_t BlockIndexCodec::encode(std::span<const Elem> block) const {
  if (block.size() != block_len_) throw ValidationError("block length mismatch in codec");
  std::size_t index = 0;
  for (std::size_t i = block.size(); i-- > 0;) {
    if (!field_.contains(block[i])) throw ValidationError("block cell out of field range");
    index = index * field_.q() + block[i];
  }
  return index;
}

Cells BlockIndexCodec::decode(std::size_t index) const {
  if (index >= size_) throw ValidationError("block index out of range");
  Cells block(block_len_);
  for (unsigned i = 0; i < block_len_; ++i) {
    block[i] = static_cast<Elem>(index % field_.q());
    index /= field_.q();
  }
  return block;
}

bool is_latin_square(const LatinSquare& m) {
  const std::size_t n = m.order;
  if (n == 0 || m.cells.size() != n * n) return false;
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t v = m.at(i, j);
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t v = m.at(j, i);
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

LatinSquare cayley_table(const ca::LocalRule& rule) {
  if (!rule.is_bipermutive()) throw ValidationError("Cayley table requires a bipermutive rule");
  const unsigned d = rule.diameter();
  const BlockIndexCodec codec(rule.field(), d - 1);
  const std::size_t n = codec.size();
  LatinSquare square{n, std::vector<std::uint32_t>(n * n)};
  Cells input(2 * (d - 1));
  for (std::size_t i = 0; i < n; ++i) {
    const Cells left = codec.decode(i);
    std::copy(left.begin(), left.end(), input.begin());
    for (std::size_t j = 0; j < n; ++j) {
      const Cells right = codec.decode(j);
      std::copy(right.begin(), right.end(), input.begin() + (d - 1));
      square.at(i, j) = static_cast<std::uint32_t>(codec.encode(ca::evaluate(rule, input)));
    }
  }
  return square;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order != b.order) throw ValidationError("orthogonality requires equal orders");
  const std::size_t n = a.order;
  std::vector<bool> seen(n * n, false);
  for (std::size_t k = 0; k < n * n; ++k) {
    const std::size_t pair = static_cast<std::size_t>(a.cells[k]) * n + b.cells[k];
    if (seen[pair]) return false;
    seen[pair] = true;
  }
  return true;
}

bool is_mols_family(std::span<const LatinSquare> squares) {
  if (squares.empty()) throw ValidationError("MOLS family must be nonempty");
  for (const LatinSquare& s : squares) {
    if (s.order != squares.front().order) {
      throw ValidationError("MOLS family requires equal orders");
    }
    if (!is_latin_square(s)) return false;
  }
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (std::size_t j = i + 1; j < squares.size(); ++j) {
      if (!are_orthogonal(squares[i], squares[j])) return false;
    }
  }
  return true;
}

unsigned oa_strength(const SymbolMatrix& m, unsigned t_max) {
  if (m.rows == 0 || m.cols == 0) return 0;
  t_max = std::min<unsigned>(t_max, static_cast<unsigned>(m.cols));
  unsigned best = 0;
  std::vector<std::size_t> counts;
  std::vector<std::size_t> cols(t_max);
  for (unsigned t = 1; t <= t_max; ++t) {
    std::uint64_t cells_t = 1;
    for (unsigned i = 0; i < t; ++i) {
      if (cells_t > (std::uint64_t{1} << 28)) {
        throw ValidationError("oa_strength projection space too large");
      }
      cells_t *= m.symbols;
    }
    if (m.rows % cells_t != 0) break;  // lambda must be integral
    const std::size_t lambda = m.rows / cells_t;
    counts.assign(cells_t, 0);
    // iterate over all C(cols, t) column subsets
    for (unsigned i = 0; i < t; ++i) cols[i] = i;
    bool uniform = true;
    while (uniform) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t r = 0; r < m.rows; ++r) {
        std::size_t key = 0;
        for (unsigned i = 0; i < t; ++i) key = key * m.symbols + m.at(r, cols[i]);
        ++counts[key];
      }
      for (std::size_t c : counts) {
        if (c != lambda) {
          uniform = false;
          break;
        }
      }
      // next combination
      int i = static_cast<int>(t) - 1;
      while (i >= 0 && cols[static_cast<unsigned>(i)] ==
                           m.cols - t + static_cast<unsigned>(i)) {
        --i;
      }
      if (i < 0) break;
      ++cols[static_cast<unsigned>(i)];
      for (unsigned j = static_cast<unsigned>(i) + 1; j < t; ++j) cols[j] = cols[j - 1] + 1;
    }
    if (!uniform) break;
    best = t;
  }
  return best;
}

OrthogonalArray mols_to_oa(std::span<const LatinSquare> squares) {
  if (!is_mols_family(squares)) throw ValidationError("mols_to_oa requires a valid MOLS family");
  const std::size_t s = squares.front().order;
  const std::size_t k = squares.size();
  SymbolMatrix m{s * s, k + 2, static_cast<std::uint32_t>(s), {}};
  m.cells.resize(m.rows * m.cols);
  std::size_t r = 0;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j, ++r) {
      m.at(r, 0) = static_cast<std::uint32_t>(i);
      m.at(r, 1) = static_cast<std::uint32_t>(j);
      for (std::size_t l = 0; l < k; ++l) m.at(r, 2 + l) = squares[l].at(i, j);
    }
  }
  OrthogonalArray oa{std::move(m), 0, 0};
  oa.strength = oa_strength(oa.matrix, 2);
  if (oa.strength != 2) throw ValidationError("MOLS-derived array failed the strength-2 check");
  oa.index = oa.matrix.rows / (static_cast<std::size_t>(s) * s);
  return oa;
}

SymbolMatrix mols_entries_array(std::span<const LatinSquare> squares) {
  if (!is_mols_family(squares)) {
    throw ValidationError("entries array requires a valid MOLS family");
  }
  const std::size_t s = squares.front().order;
  const std::size_t k = squares.size();
  SymbolMatrix m{s * s, k, static_cast<std::uint32_t>(s), {}};
  m.cells.resize(m.rows * m.cols);
  std::size_t r = 0;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j, ++r) {
      for (std::size_t l = 0; l < k; ++l) m.at(r, l) = squares[l].at(i, j);
    }
  }
  return m;
}

SymbolMatrix binary_expand(const SymbolMatrix& m) {
  unsigned bits = 0;
  while ((std::uint32_t{1} << bits) < m.symbols) ++bits;
  if ((std::uint32_t{1} << bits) != m.symbols) {
    throw ValidationError("binary expansion requires a power-of-two symbol count");
  }
  if (bits == 0) bits = 1;  // s = 1 degenerates; s = 2 stays one column per symbol
  SymbolMatrix out{m.rows, m.cols * bits, 2, {}};
  out.cells.resize(out.rows * out.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      const std::uint32_t v = m.at(r, c);
      for (unsigned b = 0; b < bits; ++b) {
        out.at(r, c * bits + b) = (v >> b) & 1;  // least significant bit first
      }
    }
  }
  return out;
}

}  // namespace moca::designs
