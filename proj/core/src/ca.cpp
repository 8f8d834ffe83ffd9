#include "moca/ca.hpp"

#include <algorithm>
#include <string>

namespace moca::ca {

Cells evaluate(const LocalRule& rule, std::span<const Elem> x) {
  const unsigned d = rule.diameter();
  if (x.size() < d) throw ValidationError("configuration shorter than the rule diameter");
  Cells out(x.size() - d + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = rule.apply(x.subspan(i, d));
  }
  return out;
}

Cells evaluate_iterated(const LocalRule& rule, std::span<const Elem> x, unsigned t) {
  Cells cur(x.begin(), x.end());
  for (unsigned i = 0; i < t; ++i) {
    cur = evaluate(rule, cur);
  }
  return cur;
}

Cells fusion(std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != v.size() || u.empty()) {
    throw ValidationError("fusion requires two blocks of equal nonzero length");
  }
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i] != v[i - 1]) throw ValidationError("fusion overlap mismatch");
  }
  Cells out(u.begin(), u.end());
  out.push_back(v.back());
  return out;
}

DeBruijnGraph::DeBruijnGraph(const LocalRule& rule)
    : field_(rule.field()), diameter_(rule.diameter()), q_(rule.field().q()) {
  const unsigned d = diameter_;
  vertex_count_ = gf::pow_u64(q_, d - 1);
  block_shift_ = gf::pow_u64(q_, d - 2);
  labels_.resize(vertex_count_ * q_);
  Cells window(d);
  for (std::size_t u = 0; u < vertex_count_; ++u) {
    std::size_t rest = u;
    for (unsigned i = 0; i < d - 1; ++i) {
      window[i] = static_cast<Elem>(rest % q_);
      rest /= q_;
    }
    for (std::size_t c = 0; c < q_; ++c) {
      window[d - 1] = static_cast<Elem>(c);
      labels_[u * q_ + c] = rule.apply(window);
    }
  }
}

std::size_t DeBruijnGraph::successor(std::size_t u, Elem c) const {
  return u / q_ + static_cast<std::size_t>(c) * block_shift_;
}

bool DeBruijnGraph::adjacent(std::size_t u, std::size_t v) const {
  return v % block_shift_ == u / q_;
}

Elem DeBruijnGraph::label(std::size_t u, std::size_t v) const {
  if (u >= vertex_count_ || v >= vertex_count_ || !adjacent(u, v)) {
    throw ValidationError("not an edge of the de Bruijn graph");
  }
  return labels_[u * q_ + v / block_shift_];
}

DeBruijnGraph de_bruijn(const LocalRule& rule) { return DeBruijnGraph(rule); }

namespace {

// Unique w with f(w, known...) = y, by leftmost permutivity.
Elem solve_left(const LocalRule& rule, std::span<Elem> window, Elem y) {
  for (Elem cand = 0; cand < rule.field().q(); ++cand) {
    window[0] = cand;
    if (rule.apply(window) == y) return cand;
  }
  throw ValidationError("rule is not leftmost permutive on this window");
}

Elem solve_right(const LocalRule& rule, std::span<Elem> window, Elem y) {
  for (Elem cand = 0; cand < rule.field().q(); ++cand) {
    window[window.size() - 1] = cand;
    if (rule.apply(window) == y) return cand;
  }
  throw ValidationError("rule is not rightmost permutive on this window");
}

}  // namespace

Cells preimage(const LocalRule& rule, std::span<const Elem> y, std::span<const Elem> seed,
               std::size_t position) {
  if (!rule.is_bipermutive()) throw ValidationError("preimage requires a bipermutive rule");
  const unsigned d = rule.diameter();
  if (y.empty()) throw ValidationError("preimage of an empty configuration");
  if (seed.size() != d - 1) throw ValidationError("seed must have d-1 cells");
  if (position < 1 || position > y.size() + 1) {
    throw ValidationError("seed position out of range");
  }
  const std::size_t n = y.size();
  const std::size_t s = position - 1;  // 0-based leftmost seed cell
  Cells x(n + d - 1);
  std::copy(seed.begin(), seed.end(), x.begin() + static_cast<std::ptrdiff_t>(s));
  Cells window(d);
  // Rightward: window j spans x[j..j+d-1]; the first d-1 cells are known.
  for (std::size_t j = s; j < n; ++j) {
    std::copy(x.begin() + static_cast<std::ptrdiff_t>(j),
              x.begin() + static_cast<std::ptrdiff_t>(j + d - 1), window.begin());
    x[j + d - 1] = solve_right(rule, window, y[j]);
  }
  // Leftward: window j's last d-1 cells are known.
  for (std::size_t j = s; j-- > 0;) {
    std::copy(x.begin() + static_cast<std::ptrdiff_t>(j + 1),
              x.begin() + static_cast<std::ptrdiff_t>(j + d), window.begin() + 1);
    x[j] = solve_left(rule, window, y[j]);
  }
  return x;
}

Cells iterate_preimage(const LocalRule& rule, std::span<const Elem> y,
                       std::span<const SeedAt> seeds) {
  Cells cur(y.begin(), y.end());
  for (const SeedAt& seed : seeds) {
    cur = preimage(rule, cur, seed.block, seed.position);
  }
  return cur;
}

std::string format_cells(std::span<const Elem> cells) {
  std::string out;
  out.reserve(cells.size());
  for (Elem c : cells) {
    if (c > 9) throw ValidationError("digit form supports alphabets up to 10 symbols");
    out.push_back(static_cast<char>('0' + c));
  }
  return out;
}

Cells parse_cells(const std::string& text, const FieldSpec& field) {
  Cells out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw ValidationError("configuration must be a digit string");
    const Elem v = static_cast<Elem>(ch - '0');
    if (!field.contains(v)) {
      throw ValidationError("cell value " + std::string(1, ch) + " outside F_" +
                            std::to_string(field.q()));
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace moca::ca
