#include "moca/nonlinear_moca.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace moca::nonlinear {

namespace {

void require_binary_pair(const ca::LocalRule& f, const ca::LocalRule& g) {
  if (!f.is_binary() || !g.is_binary()) {
    throw ValidationError("rule pair must be binary");
  }
  if (f.diameter() != g.diameter()) {
    throw ValidationError("rule pair diameter mismatch");
  }
}

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

// Ascending-bitmask unranking of weight-w masks over m bits (combinatorial
// number system).
std::uint32_t unrank_mask(unsigned m, unsigned w, std::uint64_t rank) {
  std::uint32_t mask = 0;
  for (unsigned i = w; i >= 1; --i) {
    unsigned c = i - 1;
    while (c + 1 < m && binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    mask |= std::uint32_t{1} << c;
  }
  return mask;
}

// Next same-weight bitmask in ascending order (Gosper).
std::uint32_t next_mask(std::uint32_t v) {
  const std::uint32_t c = v & static_cast<std::uint32_t>(-static_cast<std::int32_t>(v));
  const std::uint32_t r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

struct FastContext {
  unsigned d;
  unsigned m;           // 2^{d-2} generating inputs
  unsigned n;           // d-1 output cells
  std::size_t width;    // 2(d-1) input cells
  std::size_t inputs;   // 2^{2(d-1)}
  std::vector<std::uint16_t> midlex;  // lex index of the middle cells per window
  std::vector<std::uint8_t> fmap;     // per phi: inputs outputs, phi-major
  std::vector<std::uint8_t> nl;       // nonlinearity per phi (full rule)

  const std::uint8_t* map_of(std::uint32_t phi) const { return fmap.data() + phi * inputs; }
};

FastContext build_context(unsigned d) {
  FastContext ctx;
  ctx.d = d;
  ctx.m = 1u << (d - 2);
  ctx.n = d - 1;
  ctx.width = 2 * (d - 1);
  ctx.inputs = std::size_t{1} << ctx.width;
  const std::size_t windows = std::size_t{1} << d;
  ctx.midlex.resize(windows);
  for (std::size_t i = 0; i < windows; ++i) {
    // window bits are cell values with the leftmost cell least significant;
    // the generating table is indexed lexicographically (x2 most significant)
    std::uint16_t lex = 0;
    for (unsigned j = 1; j + 1 < d; ++j) {
      lex = static_cast<std::uint16_t>((lex << 1) | ((i >> j) & 1));
    }
    ctx.midlex[i] = lex;
  }
  const std::size_t phis = std::size_t{1} << ctx.m;
  ctx.fmap.resize(phis * ctx.inputs);
  ctx.nl.resize(phis);
  const std::size_t dmask = windows - 1;
  std::vector<std::int32_t> wh(windows);
  for (std::uint32_t phi = 0; phi < phis; ++phi) {
    std::uint8_t* map = ctx.fmap.data() + phi * ctx.inputs;
    std::array<std::uint8_t, 64> tbl{};
    for (std::size_t i = 0; i < windows; ++i) {
      tbl[i] = static_cast<std::uint8_t>((i & 1) ^ ((phi >> ctx.midlex[i]) & 1) ^
                                         ((i >> (d - 1)) & 1));
    }
    for (std::size_t x = 0; x < ctx.inputs; ++x) {
      std::uint8_t out = 0;
      for (unsigned j = 0; j < ctx.n; ++j) {
        out |= static_cast<std::uint8_t>(tbl[(x >> j) & dmask] << j);
      }
      map[x] = out;
    }
    // nonlinearity of the full d-variable rule via Walsh butterfly
    for (std::size_t i = 0; i < windows; ++i) wh[i] = tbl[i] ? -1 : 1;
    for (std::size_t h = 1; h < windows; h <<= 1) {
      for (std::size_t i = 0; i < windows; i += h << 1) {
        for (std::size_t j = i; j < i + h; ++j) {
          const std::int32_t a = wh[j], b = wh[j + h];
          wh[j] = a + b;
          wh[j + h] = a - b;
        }
      }
    }
    std::int32_t maxabs = 0;
    for (std::int32_t v : wh) maxabs = std::max(maxabs, v < 0 ? -v : v);
    ctx.nl[phi] = static_cast<std::uint8_t>((windows - static_cast<std::size_t>(maxabs)) / 2);
  }
  return ctx;
}

}  // namespace

RulePair make_rule_pair(ca::LocalRule f, ca::LocalRule g) {
  require_binary_pair(f, g);
  if (!f.is_bipermutive() || !g.is_bipermutive()) {
    throw ValidationError("rule pair requires bipermutive rules");
  }
  return RulePair{std::move(f), std::move(g)};
}

bool is_pairwise_balanced(const ca::LocalRule& f, const ca::LocalRule& g) {
  require_binary_pair(f, g);
  const std::vector<Elem> tf = f.truth_table();
  const std::vector<Elem> tg = g.truth_table();
  std::array<std::size_t, 4> counts{};
  for (std::size_t i = 0; i < tf.size(); ++i) {
    ++counts[(tf[i] << 1) | tg[i]];
  }
  const std::size_t expected = tf.size() / 4;
  return counts[0] == expected && counts[1] == expected && counts[2] == expected &&
         counts[3] == expected;
}

bool generating_condition(std::span<const Elem> phi, std::span<const Elem> gamma) {
  if (phi.size() != gamma.size() || phi.empty()) {
    throw ValidationError("generating tables must have equal nonzero size");
  }
  std::size_t mixed = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    mixed += (phi[i] ^ gamma[i]) & 1;
  }
  return 2 * mixed == phi.size();
}

std::uint64_t count_pairwise_balanced(unsigned d) {
  if (d < 3) throw ValidationError("pairwise balanced count requires d >= 3");
  const unsigned m = 1u << (d - 2);
  return binomial(m, m / 2) << m;
}

std::uint64_t balanced_code_count(unsigned d) { return count_pairwise_balanced(d); }

BalancedPairCode code_at(unsigned d, std::uint64_t rank) {
  if (d < 3) throw ValidationError("balanced codes require d >= 3");
  const unsigned m = 1u << (d - 2);
  const std::uint64_t orient_count = std::uint64_t{1} << m;
  if (rank >= count_pairwise_balanced(d)) {
    throw ValidationError("balanced code rank out of range");
  }
  BalancedPairCode code;
  code.diameter = d;
  code.component_types = unrank_mask(m, m / 2, rank / orient_count);
  code.orientations = static_cast<std::uint32_t>(rank % orient_count);
  return code;
}

RulePair decode(const BalancedPairCode& code) {
  const unsigned d = code.diameter;
  if (d < 3 || d > 6) throw ValidationError("balanced codes support diameters 3..6");
  const unsigned m = 1u << (d - 2);
  std::vector<Elem> phi(m), gamma(m);
  for (unsigned t = 0; t < m; ++t) {
    phi[t] = (code.orientations >> t) & 1;
    gamma[t] = phi[t] ^ ((code.component_types >> t) & 1);
  }
  return RulePair{ca::LocalRule::from_generating(d, std::move(phi)),
                  ca::LocalRule::from_generating(d, std::move(gamma))};
}

void for_each_pairwise_balanced(unsigned d, const std::function<void(const RulePair&)>& visit) {
  if (d < 3 || d > 6) throw ValidationError("enumeration supports diameters 3..6");
  const unsigned m = 1u << (d - 2);
  const std::uint64_t orient_count = std::uint64_t{1} << m;
  const std::uint32_t last = static_cast<std::uint32_t>(((std::uint64_t{1} << (m / 2)) - 1)
                                                        << (m / 2));
  std::uint32_t types = (std::uint32_t{1} << (m / 2)) - 1;
  while (true) {
    for (std::uint64_t o = 0; o < orient_count; ++o) {
      BalancedPairCode code{d, types, static_cast<std::uint32_t>(o)};
      visit(decode(code));
    }
    if (types == last) break;
    types = next_mask(types);
  }
}

std::vector<RulePair> enumerate_pairwise_balanced(unsigned d) {
  std::vector<RulePair> out;
  for_each_pairwise_balanced(d, [&](const RulePair& pair) { out.push_back(pair); });
  return out;
}

bool are_orthogonal_rules(const ca::LocalRule& f, const ca::LocalRule& g) {
  if (!f.is_bipermutive() || !g.is_bipermutive()) {
    throw ValidationError("orthogonality requires bipermutive rules");
  }
  return designs::are_orthogonal(designs::cayley_table(f), designs::cayley_table(g));
}

std::uint64_t orthogonality_certificate(const ca::LocalRule& f, const ca::LocalRule& g) {
  const designs::LatinSquare a = designs::cayley_table(f);
  const designs::LatinSquare b = designs::cayley_table(g);
  if (a.order != b.order) throw ValidationError("certificate requires equal orders");
  std::uint64_t h = kFnvOffset;
  for (std::size_t k = 0; k < a.cells.size(); ++k) {
    h = (h ^ static_cast<std::uint8_t>(a.cells[k])) * kFnvPrime;
    h = (h ^ static_cast<std::uint8_t>(b.cells[k])) * kFnvPrime;
  }
  return h;
}

namespace {

void search_range(const FastContext& ctx, bool nonlinear_only, std::uint64_t first,
                  std::uint64_t last, std::vector<SearchResult>& out) {
  const unsigned m = ctx.m;
  const std::uint64_t orient_count = std::uint64_t{1} << m;
  const std::size_t N = std::size_t{1} << ctx.n;
  std::vector<std::uint32_t> stamp(N * N, 0);
  std::uint32_t epoch = 0;
  std::uint64_t rank = first;
  std::uint32_t types = unrank_mask(m, m / 2, first / orient_count);
  std::uint64_t orient = first % orient_count;
  while (rank < last) {
    const std::uint32_t phi = static_cast<std::uint32_t>(orient);
    const std::uint32_t gamma = phi ^ types;
    const std::uint8_t* fm = ctx.map_of(phi);
    const std::uint8_t* gm = ctx.map_of(gamma);
    bool candidate = !nonlinear_only || (ctx.nl[phi] > 0 && ctx.nl[gamma] > 0);
    if (candidate) {
      ++epoch;
      bool orthogonal = true;
      for (std::size_t x = 0; x < ctx.inputs; ++x) {
        const std::size_t pair = (static_cast<std::size_t>(fm[x]) << ctx.n) | gm[x];
        if (stamp[pair] == epoch) {
          orthogonal = false;
          break;
        }
        stamp[pair] = epoch;
      }
      if (orthogonal) {
        SearchResult res;
        res.rank = rank;
        res.nonlinearity_f = ctx.nl[phi];
        res.nonlinearity_g = ctx.nl[gamma];
        // wolfram codes from the window tables (window index = lex input)
        std::uint64_t wf = 0, wg = 0;
        const std::size_t windows = std::size_t{1} << ctx.d;
        for (std::size_t i = 0; i < windows; ++i) {
          std::size_t lex = 0;
          for (unsigned j = 0; j < ctx.d; ++j) lex |= ((i >> (ctx.d - 1 - j)) & 1) << j;
          // i is the lex index here; lex is the LSB-first window value
          wf |= static_cast<std::uint64_t>((lex & 1) ^ ((phi >> ctx.midlex[lex]) & 1) ^
                                           ((lex >> (ctx.d - 1)) & 1))
                << i;
          wg |= static_cast<std::uint64_t>((lex & 1) ^ ((gamma >> ctx.midlex[lex]) & 1) ^
                                           ((lex >> (ctx.d - 1)) & 1))
                << i;
        }
        res.wolfram_f = wf;
        res.wolfram_g = wg;
        // certificate over the row-major superposition; Cayley entry (i,j)
        // reads the map at x = i | (j << n)
        std::uint64_t h = kFnvOffset;
        for (std::size_t i = 0; i < N; ++i) {
          for (std::size_t j = 0; j < N; ++j) {
            const std::size_t x = i | (j << ctx.n);
            h = (h ^ fm[x]) * kFnvPrime;
            h = (h ^ gm[x]) * kFnvPrime;
          }
        }
        res.certificate = h;
        out.push_back(res);
      }
    }
    ++rank;
    if (++orient == orient_count) {
      orient = 0;
      if (rank < last) types = next_mask(types);
    }
  }
}

}  // namespace

std::vector<SearchResult> search_orthogonal(unsigned d, const SearchOptions& options) {
  if (d < 3 || d > 6) throw ValidationError("orthogonality search supports diameters 3..6");
  const std::uint64_t total = count_pairwise_balanced(d);
  const std::uint64_t first = std::min(options.first_rank, total);
  const std::uint64_t last = std::min(options.last_rank, total);
  if (first >= last) return {};
  const FastContext ctx = build_context(d);
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || last - first < 2 * threads) {
    std::vector<SearchResult> out;
    search_range(ctx, options.nonlinear_only, first, last, out);
    return out;
  }
  // Contiguous rank chunks per worker; concatenation preserves rank order,
  // so the output is identical for every thread count.
  std::vector<std::vector<SearchResult>> partial(threads);
  std::vector<std::thread> pool;
  const std::uint64_t span = last - first;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = first + span * t / threads;
    const std::uint64_t hi = first + span * (t + 1) / threads;
    pool.emplace_back([&ctx, &options, lo, hi, &partial, t] {
      search_range(ctx, options.nonlinear_only, lo, hi, partial[t]);
    });
  }
  for (std::thread& th : pool) th.join();
  std::vector<SearchResult> out;
  for (std::vector<SearchResult>& p : partial) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

}  // namespace moca::nonlinear
