#ifndef MOCA_SSS_HPP
#define MOCA_SSS_HPP

#include <cstdint>
#include <vector>

#include "moca/prng.hpp"

namespace moca::sss {

using ca::Cells;
using gf::Elem;

/// One share of the (2,n) threshold scheme: a block index in 0..N-1 held by a
/// 1-based player.
struct Share {
  unsigned player = 0;
  std::uint64_t value = 0;
};

/// The family is a list of bipermutive rules whose Cayley tables are pairwise
/// orthogonal; validated on entry.
void validate_moca_rules(std::span<const ca::LocalRule> family);

/// Share i = L_i(secret, randomness), evaluated directly on the CA without
/// materializing the squares.
std::vector<Share> deal(std::uint64_t secret, std::uint64_t randomness,
                        std::span<const ca::LocalRule> family);

/// Coupled de Bruijn graph of two rules: edges carry the label pair
/// (f(u fused v), g(u fused v)).
class CoupledDeBruijnGraph {
 public:
  CoupledDeBruijnGraph(const ca::LocalRule& f, const ca::LocalRule& g);

  std::size_t vertex_count() const noexcept { return graph_f_.vertex_count(); }
  std::pair<Elem, Elem> label_by_symbol(std::size_t u, Elem c) const {
    return {graph_f_.label_by_symbol(u, c), graph_g_.label_by_symbol(u, c)};
  }
  std::size_t successor(std::size_t u, Elem c) const { return graph_f_.successor(u, c); }
  const gf::FieldSpec& field() const noexcept { return graph_f_.field(); }
  unsigned diameter() const noexcept { return graph_f_.diameter(); }

 private:
  ca::DeBruijnGraph graph_f_, graph_g_;
};

/// The unique x of length 2(d-1) with F(x) = w and G(x) = z, found as the one
/// vertex path of the coupled graph whose edge labels read (w_i, z_i).
/// Throws when no path exists; reports an invariant failure on multiple paths.
Cells invert_coupled(const ca::LocalRule& f, const ca::LocalRule& g,
                     std::span<const Elem> w, std::span<const Elem> z);
Cells invert_coupled(const CoupledDeBruijnGraph& graph, std::span<const Elem> w,
                     std::span<const Elem> z);

/// Linear path: solve the Sylvester system M x = w || z and read the secret
/// off the left half; forward-verified before returning.
std::uint64_t reconstruct_linear(const Share& a, const Share& b,
                                 std::span<const ca::LocalRule> family);

/// Generic path through the coupled de Bruijn graph.
std::uint64_t reconstruct_coupled(const Share& a, const Share& b,
                                  std::span<const ca::LocalRule> family);

/// Dispatches to the linear path when both rules are linear, else coupled.
std::uint64_t reconstruct(const Share& a, const Share& b,
                          std::span<const ca::LocalRule> family);

/// Row b of the result lists every secret S with L_player(S, R) = b for some
/// R; the scheme is perfectly secret iff each row is all of 0..N-1.
std::vector<std::vector<std::uint64_t>> secrecy_audit(std::span<const ca::LocalRule> family,
                                                      unsigned player);
bool audit_uniform(const std::vector<std::vector<std::uint64_t>>& table);

/// Sequential (k,n) scheme of the preimage construction. The dealer starts
/// from `copies` concatenated copies of the secret and iterates the preimage
/// computation until the configuration has players * |secret| cells, one
/// m-cell block per player. Seeds are consumed one per step.
std::vector<Cells> sequential_deal(std::span<const Elem> secret, const ca::LocalRule& rule,
                                   unsigned players, unsigned copies,
                                   std::span<const ca::SeedAt> seeds);

/// Concatenate adjacent shares in order and evolve the CA forward `steps`
/// times.
Cells sequential_reconstruct(std::span<const Cells> shares, const ca::LocalRule& rule,
                             unsigned steps);

/// Steps the dealer needs: (players - copies) * m / (d - 1); throws when the
/// length arithmetic is infeasible.
unsigned sequential_steps(std::size_t secret_len, unsigned diameter, unsigned players,
                          unsigned copies);

}  // namespace moca::sss

#endif
