#ifndef MOCA_CA_HPP
#define MOCA_CA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moca/rule.hpp"

namespace moca::ca {

/// No-boundary application: output cell i = f(x_i..x_{i+d-1}),
/// output length |x| - d + 1.
Cells evaluate(const LocalRule& rule, std::span<const Elem> x);

/// Apply the no-boundary map t times.
Cells evaluate_iterated(const LocalRule& rule, std::span<const Elem> x, unsigned t);

/// Fusion of two overlap-compatible (d-1)-blocks into one d-block:
/// u = u1 t, v = t v1 -> u1 t v1. Throws when the overlap disagrees.
Cells fusion(std::span<const Elem> u, std::span<const Elem> v);

/// De Bruijn graph of a rule: vertices are (d-1)-blocks indexed by the block
/// codec (leftmost cell least significant); q labeled out-edges per vertex.
class DeBruijnGraph {
 public:
  explicit DeBruijnGraph(const LocalRule& rule);

  const FieldSpec& field() const noexcept { return field_; }
  unsigned diameter() const noexcept { return diameter_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return labels_.size(); }

  /// Successor reached from u by appending rightmost cell c.
  std::size_t successor(std::size_t u, Elem c) const;
  /// Label of the edge u -> successor(u, c).
  Elem label_by_symbol(std::size_t u, Elem c) const { return labels_[u * q_ + c]; }
  /// Label of edge (u, v); throws when u and v do not overlap.
  Elem label(std::size_t u, std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  FieldSpec field_;
  unsigned diameter_;
  std::size_t q_;
  std::size_t vertex_count_;
  std::size_t block_shift_;       // q^{d-2}
  std::vector<Elem> labels_;      // indexed u*q + appended symbol
};

DeBruijnGraph de_bruijn(const LocalRule& rule);

/// The unique preimage of y under a bipermutive rule that agrees with the
/// given (d-1)-cell seed at the 1-based position (seed occupies preimage
/// cells position..position+d-2). Result length |y| + d - 1.
Cells preimage(const LocalRule& rule, std::span<const Elem> y, std::span<const Elem> seed,
               std::size_t position);

struct SeedAt {
  Cells block;
  std::size_t position = 1;  // 1-based, defaults to leftmost
};

/// Iterate the preimage computation once per seed; each step grows the
/// configuration by d-1 cells. No seeds returns y unchanged.
Cells iterate_preimage(const LocalRule& rule, std::span<const Elem> y,
                       std::span<const SeedAt> seeds);

/// Digit-string round trip for configurations, leftmost cell first.
std::string format_cells(std::span<const Elem> cells);
Cells parse_cells(const std::string& text, const FieldSpec& field);

}  // namespace moca::ca

#endif
