#ifndef MOCA_PRNG_HPP
#define MOCA_PRNG_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "moca/linear_moca.hpp"
#include "moca/nonlinear_moca.hpp"

namespace moca::prng {

using ca::Cells;
using gf::Elem;

/// A validated orthogonal CA pair: equal field and diameter, both bipermutive,
/// Cayley tables orthogonal (gcd criterion for linear pairs, superposition
/// check otherwise).
class OcaPair {
 public:
  OcaPair(ca::LocalRule f, ca::LocalRule g);

  const ca::LocalRule& f() const noexcept { return f_; }
  const ca::LocalRule& g() const noexcept { return g_; }
  const gf::FieldSpec& field() const noexcept { return f_.field(); }
  unsigned diameter() const noexcept { return f_.diameter(); }
  unsigned state_width() const noexcept { return 2 * (diameter() - 1); }
  bool linear() const noexcept { return f_.is_linear() && g_.is_linear(); }

 private:
  ca::LocalRule f_, g_;
};

/// One application of the superposed permutation: F(state) || G(state).
Cells step(const OcaPair& pair, std::span<const Elem> state);

/// Stream of d-1 cell blocks: the F-half of each successive state.
std::vector<Elem> keystream(const OcaPair& pair, std::span<const Elem> seed, std::size_t blocks);

/// Least e >= 1 with step^e(seed) = seed.
std::uint64_t cycle_length(const OcaPair& pair, std::span<const Elem> seed);

/// Complete cycle decomposition as (length, count), ascending by length.
/// Guarded to q^{2(d-1)} <= 2^26 states.
std::vector<std::pair<std::uint64_t, std::uint64_t>> cycle_structure(const OcaPair& pair);

struct MaxPeriodReport {
  std::uint64_t order = 0;               // multiplicative order of the Sylvester matrix
  gf::Polynomial min_poly;               // minimal polynomial of that matrix
  bool min_poly_primitive = false;       // primitive in the finite-field sense
  bool min_poly_full_degree = false;     // degree equals the state width 2(d-1)
  bool achieves_max = false;             // order == q^{2(d-1)} - 1
};

/// Cycle analysis of a linear pair via its Sylvester matrix. The maximal
/// period q^{2n}-1 is attained exactly when the minimal polynomial is a
/// primitive polynomial of full degree 2n.
MaxPeriodReport max_period_report(const OcaPair& pair);

}  // namespace moca::prng

#endif
