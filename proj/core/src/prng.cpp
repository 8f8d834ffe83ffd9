#include "moca/prng.hpp"

#include <algorithm>
#include <map>

namespace moca::prng {

OcaPair::OcaPair(ca::LocalRule f, ca::LocalRule g) : f_(std::move(f)), g_(std::move(g)) {
  if (!(f_.field() == g_.field())) throw ValidationError("pair field mismatch");
  if (f_.diameter() != g_.diameter()) throw ValidationError("pair diameter mismatch");
  if (!f_.is_bipermutive() || !g_.is_bipermutive()) {
    throw ValidationError("pair requires bipermutive rules");
  }
  bool orthogonal;
  if (linear()) {
    orthogonal = linear::are_orthogonal_linear(linear::make_linear_pair(f_, g_));
  } else {
    orthogonal = nonlinear::are_orthogonal_rules(f_, g_);
  }
  if (!orthogonal) throw ValidationError("rules do not form an orthogonal pair");
}

Cells step(const OcaPair& pair, std::span<const Elem> state) {
  if (state.size() != pair.state_width()) {
    throw ValidationError("state must have 2(d-1) cells");
  }
  Cells out = ca::evaluate(pair.f(), state);
  const Cells right = ca::evaluate(pair.g(), state);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

std::vector<Elem> keystream(const OcaPair& pair, std::span<const Elem> seed,
                            std::size_t blocks) {
  if (seed.size() != pair.state_width()) {
    throw ValidationError("seed must have 2(d-1) cells");
  }
  const std::size_t half = pair.diameter() - 1;
  std::vector<Elem> out;
  out.reserve(blocks * half);
  Cells state(seed.begin(), seed.end());
  for (std::size_t i = 0; i < blocks; ++i) {
    state = step(pair, state);
    out.insert(out.end(), state.begin(), state.begin() + static_cast<std::ptrdiff_t>(half));
  }
  return out;
}

std::uint64_t cycle_length(const OcaPair& pair, std::span<const Elem> seed) {
  Cells start(seed.begin(), seed.end());
  Cells cur = step(pair, start);
  std::uint64_t e = 1;
  while (cur != start) {
    cur = step(pair, cur);
    ++e;
  }
  return e;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> cycle_structure(const OcaPair& pair) {
  const designs::BlockIndexCodec codec(pair.field(), pair.state_width());
  if (codec.size() > (std::size_t{1} << 26)) {
    throw ValidationError("cycle enumeration guarded to 2^26 states");
  }
  const std::size_t states = codec.size();
  std::vector<bool> visited(states, false);
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (std::size_t s0 = 0; s0 < states; ++s0) {
    if (visited[s0]) continue;
    std::uint64_t length = 0;
    std::size_t s = s0;
    do {
      visited[s] = true;
      ++length;
      s = codec.encode(step(pair, codec.decode(s)));
    } while (s != s0);
    ++histogram[length];
  }
  return {histogram.begin(), histogram.end()};
}

MaxPeriodReport max_period_report(const OcaPair& pair) {
  if (!pair.linear()) throw ValidationError("max period report requires a linear pair");
  const gf::FieldMatrix m = gf::sylvester_matrix(pair.field(), pair.f().coefficients(),
                                                 pair.g().coefficients());
  MaxPeriodReport report{0, gf::minimal_polynomial(m), false, false, false};
  const auto order = gf::matrix_order(m);
  if (!order) throw ValidationError("Sylvester matrix unexpectedly singular");
  report.order = *order;
  report.min_poly_full_degree =
      report.min_poly.degree() == static_cast<int>(pair.state_width());
  report.min_poly_primitive =
      gf::is_irreducible(report.min_poly) && report.min_poly.constant_term() != 0 &&
      gf::is_primitive(report.min_poly);
  report.achieves_max =
      report.order == gf::pow_u64(pair.field().q(), pair.state_width()) - 1;
  return report;
}

}  // namespace moca::prng
