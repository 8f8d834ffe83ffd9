#include "moca/sss.hpp"

#include <algorithm>
#include <string>

namespace moca::sss {

namespace {

const ca::LocalRule& rule_of(std::span<const ca::LocalRule> family, unsigned player) {
  if (player < 1 || player > family.size()) {
    throw ValidationError("player index out of range");
  }
  return family[player - 1];
}

}  // namespace

void validate_moca_rules(std::span<const ca::LocalRule> family) {
  if (family.empty()) throw ValidationError("family must be nonempty");
  const ca::LocalRule& first = family.front();
  for (const ca::LocalRule& rule : family) {
    if (!(rule.field() == first.field()) || rule.diameter() != first.diameter()) {
      throw ValidationError("family rules must share field and diameter");
    }
    if (!rule.is_bipermutive()) throw ValidationError("family rules must be bipermutive");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const bool orth =
          family[i].is_linear() && family[j].is_linear()
              ? linear::are_orthogonal_linear(linear::make_linear_pair(family[i], family[j]))
              : nonlinear::are_orthogonal_rules(family[i], family[j]);
      if (!orth) throw ValidationError("family rules are not pairwise orthogonal");
    }
  }
}

std::vector<Share> deal(std::uint64_t secret, std::uint64_t randomness,
                        std::span<const ca::LocalRule> family) {
  validate_moca_rules(family);
  const unsigned d = family.front().diameter();
  const designs::BlockIndexCodec codec(family.front().field(), d - 1);
  if (secret >= codec.size() || randomness >= codec.size()) {
    throw ValidationError("secret and randomness must lie in 0..N-1");
  }
  Cells input = codec.decode(secret);
  const Cells right = codec.decode(randomness);
  input.insert(input.end(), right.begin(), right.end());
  std::vector<Share> shares;
  shares.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    shares.push_back(Share{static_cast<unsigned>(i + 1),
                           codec.encode(ca::evaluate(family[i], input))});
  }
  return shares;
}

CoupledDeBruijnGraph::CoupledDeBruijnGraph(const ca::LocalRule& f, const ca::LocalRule& g)
    : graph_f_(f), graph_g_(g) {
  if (!(f.field() == g.field()) || f.diameter() != g.diameter()) {
    throw ValidationError("coupled graph requires rules of equal field and diameter");
  }
}

Cells invert_coupled(const CoupledDeBruijnGraph& graph, std::span<const Elem> w,
                     std::span<const Elem> z) {
  const unsigned d = graph.diameter();
  if (w.size() != d - 1 || z.size() != d - 1) {
    throw ValidationError("coupled inversion expects two (d-1)-cell outputs");
  }
  const gf::FieldSpec& field = graph.field();
  const Elem q = field.q();
  // Follow the edge labels (w_i, z_i) from every start vertex; orthogonality
  // means exactly one walk completes.
  std::vector<std::size_t> found;
  bool have_path = false;
  struct Frame {
    std::size_t vertex;
    Elem next_symbol;
  };
  for (std::size_t start = 0; start < graph.vertex_count(); ++start) {
    std::vector<Frame> frames{{start, 0}};
    while (!frames.empty()) {
      Frame& top = frames.back();
      const std::size_t depth = frames.size() - 1;
      if (depth == w.size()) {
        if (have_path) {
          throw ValidationError("coupled graph has multiple label paths; pair not orthogonal");
        }
        have_path = true;
        found.clear();
        for (const Frame& fr : frames) found.push_back(fr.vertex);
        frames.pop_back();
        continue;
      }
      if (top.next_symbol >= q) {
        frames.pop_back();
        continue;
      }
      const Elem c = top.next_symbol++;
      const auto [lf, lg] = graph.label_by_symbol(top.vertex, c);
      if (lf == w[depth] && lg == z[depth]) {
        frames.push_back(Frame{graph.successor(top.vertex, c), 0});
      }
    }
  }
  if (!have_path) {
    throw ValidationError("no coupled path matches the outputs; pair not orthogonal");
  }
  // Fuse the vertex path back into the configuration: each fusion of two
  // consecutive blocks contributes one new rightmost cell.
  const designs::BlockIndexCodec codec(field, d - 1);
  Cells out = codec.decode(found.front());
  for (std::size_t i = 1; i < found.size(); ++i) {
    const Cells fused =
        ca::fusion(std::span<const Elem>(out).last(d - 1), codec.decode(found[i]));
    out.push_back(fused.back());
  }
  return out;
}

Cells invert_coupled(const ca::LocalRule& f, const ca::LocalRule& g,
                     std::span<const Elem> w, std::span<const Elem> z) {
  return invert_coupled(CoupledDeBruijnGraph(f, g), w, z);
}

namespace {

std::uint64_t finish_reconstruct(const Cells& x, const Share& a, const Share& b,
                                 std::span<const ca::LocalRule> family) {
  const unsigned d = family.front().diameter();
  const designs::BlockIndexCodec codec(family.front().field(), d - 1);
  // Forward verification is the integrity check: the solved configuration
  // must reproduce both shares.
  const std::uint64_t va = codec.encode(ca::evaluate(rule_of(family, a.player), x));
  const std::uint64_t vb = codec.encode(ca::evaluate(rule_of(family, b.player), x));
  if (va != a.value || vb != b.value) {
    throw ValidationError("inconsistent shares: reconstruction failed forward verification");
  }
  return codec.encode(std::span<const Elem>(x).first(d - 1));
}

void check_share_pair(const Share& a, const Share& b,
                      std::span<const ca::LocalRule> family) {
  validate_moca_rules(family);
  if (a.player == b.player) throw ValidationError("reconstruction needs two distinct players");
  const designs::BlockIndexCodec codec(family.front().field(), family.front().diameter() - 1);
  if (a.value >= codec.size() || b.value >= codec.size()) {
    throw ValidationError("share value out of range");
  }
}

}  // namespace

std::uint64_t reconstruct_linear(const Share& a, const Share& b,
                                 std::span<const ca::LocalRule> family) {
  check_share_pair(a, b, family);
  const ca::LocalRule& rf = rule_of(family, a.player);
  const ca::LocalRule& rg = rule_of(family, b.player);
  if (!rf.is_linear() || !rg.is_linear()) {
    throw ValidationError("linear reconstruction requires linear rules");
  }
  const unsigned d = rf.diameter();
  const designs::BlockIndexCodec codec(rf.field(), d - 1);
  Cells rhs = codec.decode(a.value);
  const Cells zb = codec.decode(b.value);
  rhs.insert(rhs.end(), zb.begin(), zb.end());
  const gf::FieldMatrix m =
      gf::sylvester_matrix(rf.field(), rf.coefficients(), rg.coefficients());
  const auto x = gf::matrix_solve(m, rhs);
  if (!x) throw ValidationError("Sylvester system singular: rules are not orthogonal");
  return finish_reconstruct(*x, a, b, family);
}

std::uint64_t reconstruct_coupled(const Share& a, const Share& b,
                                  std::span<const ca::LocalRule> family) {
  check_share_pair(a, b, family);
  const ca::LocalRule& rf = rule_of(family, a.player);
  const ca::LocalRule& rg = rule_of(family, b.player);
  const designs::BlockIndexCodec codec(rf.field(), rf.diameter() - 1);
  const Cells x = invert_coupled(rf, rg, codec.decode(a.value), codec.decode(b.value));
  return finish_reconstruct(x, a, b, family);
}

std::uint64_t reconstruct(const Share& a, const Share& b,
                          std::span<const ca::LocalRule> family) {
  check_share_pair(a, b, family);
  if (rule_of(family, a.player).is_linear() && rule_of(family, b.player).is_linear()) {
    return reconstruct_linear(a, b, family);
  }
  return reconstruct_coupled(a, b, family);
}

std::vector<std::vector<std::uint64_t>> secrecy_audit(std::span<const ca::LocalRule> family,
                                                      unsigned player) {
  validate_moca_rules(family);
  const ca::LocalRule& rule = rule_of(family, player);
  const designs::BlockIndexCodec codec(rule.field(), rule.diameter() - 1);
  const std::size_t n = codec.size();
  std::vector<std::vector<std::uint64_t>> table(n);
  for (std::uint64_t secret = 0; secret < n; ++secret) {
    for (std::uint64_t randomness = 0; randomness < n; ++randomness) {
      Cells input = codec.decode(secret);
      const Cells right = codec.decode(randomness);
      input.insert(input.end(), right.begin(), right.end());
      const std::uint64_t share = codec.encode(ca::evaluate(rule, input));
      table[share].push_back(secret);
    }
  }
  for (std::vector<std::uint64_t>& row : table) std::sort(row.begin(), row.end());
  return table;
}

bool audit_uniform(const std::vector<std::vector<std::uint64_t>>& table) {
  const std::size_t n = table.size();
  for (const std::vector<std::uint64_t>& row : table) {
    if (row.size() != n) return false;
    for (std::size_t s = 0; s < n; ++s) {
      if (row[s] != s) return false;  // each secret exactly once
    }
  }
  return true;
}

unsigned sequential_steps(std::size_t secret_len, unsigned diameter, unsigned players,
                          unsigned copies) {
  if (secret_len == 0) throw ValidationError("secret must be nonempty");
  if (copies == 0 || copies > players) {
    throw ValidationError("copies must lie in 1..players");
  }
  const std::size_t growth = (players - copies) * secret_len;
  if (growth % (diameter - 1) != 0) {
    throw ValidationError("(players - copies) * m must be divisible by d-1");
  }
  return static_cast<unsigned>(growth / (diameter - 1));
}

std::vector<Cells> sequential_deal(std::span<const Elem> secret, const ca::LocalRule& rule,
                                   unsigned players, unsigned copies,
                                   std::span<const ca::SeedAt> seeds) {
  if (!rule.is_bipermutive()) throw ValidationError("sequential scheme needs a bipermutive rule");
  if (players < 2) throw ValidationError("need at least two players");
  const unsigned steps = sequential_steps(secret.size(), rule.diameter(), players, copies);
  if (seeds.size() != steps) {
    throw ValidationError("expected " + std::to_string(steps) + " per-step seeds");
  }
  Cells config;
  config.reserve(secret.size() * copies);
  for (unsigned c = 0; c < copies; ++c) config.insert(config.end(), secret.begin(), secret.end());
  config = ca::iterate_preimage(rule, config, seeds);
  std::vector<Cells> shares(players);
  for (unsigned p = 0; p < players; ++p) {
    shares[p].assign(config.begin() + static_cast<std::ptrdiff_t>(p * secret.size()),
                     config.begin() + static_cast<std::ptrdiff_t>((p + 1) * secret.size()));
  }
  return shares;
}

Cells sequential_reconstruct(std::span<const Cells> shares, const ca::LocalRule& rule,
                             unsigned steps) {
  if (shares.empty()) throw ValidationError("no shares supplied");
  Cells config;
  for (const Cells& block : shares) config.insert(config.end(), block.begin(), block.end());
  const unsigned d = rule.diameter();
  if (config.size() < steps * (d - 1) + 1) {
    throw ValidationError("share blocks too short for the requested step count");
  }
  return ca::evaluate_iterated(rule, config, steps);
}

}  // namespace moca::sss
