#include "moca/rule.hpp"

#include <string>
#include <utility>

namespace moca::ca {

LocalRule::LocalRule(FieldSpec field, unsigned diameter, bool linear, std::vector<Elem> data)
    : field_(field), diameter_(diameter), linear_(linear), data_(std::move(data)) {}

LocalRule LocalRule::linear(FieldSpec field, std::vector<Elem> coeffs) {
  if (coeffs.size() < 2) throw ValidationError("linear rule needs diameter >= 2");
  for (Elem& c : coeffs) c %= field.q();
  const unsigned d = static_cast<unsigned>(coeffs.size());
  return LocalRule(field, d, true, std::move(coeffs));
}

LocalRule LocalRule::table(unsigned diameter, std::vector<Elem> bits) {
  if (diameter < 2) throw ValidationError("table rule needs diameter >= 2");
  if (diameter > 20) throw ValidationError("table rule diameter too large");
  if (bits.size() != (std::size_t{1} << diameter)) {
    throw ValidationError("truth table must have 2^d entries");
  }
  for (Elem b : bits) {
    if (b > 1) throw ValidationError("truth table entries must be bits");
  }
  return LocalRule(FieldSpec(2), diameter, false, std::move(bits));
}

LocalRule LocalRule::from_wolfram(unsigned diameter, std::uint64_t code) {
  if (diameter < 2 || diameter > 6) {
    throw ValidationError("wolfram code form supports diameters 2..6");
  }
  const unsigned n = 1u << diameter;
  if (diameter < 6 && code >= (std::uint64_t{1} << n)) {
    throw ValidationError("wolfram code out of range for diameter " + std::to_string(diameter));
  }
  std::vector<Elem> bits(n);
  for (unsigned i = 0; i < n; ++i) bits[i] = static_cast<Elem>((code >> i) & 1);
  return table(diameter, std::move(bits));
}

LocalRule LocalRule::from_generating(unsigned diameter, std::vector<Elem> g_bits) {
  if (diameter < 2) throw ValidationError("generating form needs diameter >= 2");
  const std::size_t g_size = std::size_t{1} << (diameter - 2);
  if (diameter == 2 && g_bits.empty()) g_bits = {0};
  if (g_bits.size() != g_size) {
    throw ValidationError("generating table must have 2^(d-2) entries");
  }
  std::vector<Elem> bits(std::size_t{1} << diameter);
  for (std::size_t idx = 0; idx < bits.size(); ++idx) {
    const Elem x1 = static_cast<Elem>((idx >> (diameter - 1)) & 1);
    const Elem xd = static_cast<Elem>(idx & 1);
    const std::size_t mid = (idx >> 1) & (g_size - 1);
    bits[idx] = x1 ^ (g_bits[mid] & 1) ^ xd;
  }
  return table(diameter, std::move(bits));
}

const std::vector<Elem>& LocalRule::coefficients() const {
  if (!linear_) throw ValidationError("rule is not in linear form");
  return data_;
}

std::vector<Elem> LocalRule::truth_table() const {
  if (!linear_) return data_;
  if (field_.q() != 2) throw ValidationError("truth table only defined for binary rules");
  std::vector<Elem> bits(std::size_t{1} << diameter_);
  for (std::size_t idx = 0; idx < bits.size(); ++idx) {
    Elem acc = 0;
    for (unsigned j = 0; j < diameter_; ++j) {
      const Elem cell = static_cast<Elem>((idx >> (diameter_ - 1 - j)) & 1);
      acc ^= data_[j] & cell;
    }
    bits[idx] = acc;
  }
  return bits;
}

std::uint64_t LocalRule::wolfram() const {
  const std::vector<Elem> bits = truth_table();
  if (bits.size() > 64) throw ValidationError("wolfram code exceeds 64 bits");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    code |= static_cast<std::uint64_t>(bits[i] & 1) << i;
  }
  return code;
}

Elem LocalRule::apply(std::span<const Elem> window) const {
  if (window.size() != diameter_) throw ValidationError("window size must equal the diameter");
  if (linear_) {
    Elem acc = 0;
    for (unsigned j = 0; j < diameter_; ++j) {
      if (!field_.contains(window[j])) throw ValidationError("cell value out of field range");
      acc = field_.add(acc, field_.mul(data_[j], window[j]));
    }
    return acc;
  }
  std::size_t idx = 0;
  for (unsigned j = 0; j < diameter_; ++j) {
    if (window[j] > 1) throw ValidationError("cell value out of field range");
    idx = (idx << 1) | window[j];
  }
  return data_[idx];
}

bool LocalRule::leftmost_permutive() const {
  if (linear_) return data_.front() != 0;
  // Binary: f(0,rest) != f(1,rest) for every rest.
  const std::size_t half = data_.size() / 2;
  for (std::size_t rest = 0; rest < half; ++rest) {
    if (data_[rest] == data_[half + rest]) return false;
  }
  return true;
}

bool LocalRule::rightmost_permutive() const {
  if (linear_) return data_.back() != 0;
  for (std::size_t base = 0; base < data_.size(); base += 2) {
    if (data_[base] == data_[base + 1]) return false;
  }
  return true;
}

bool LocalRule::is_bipermutive() const {
  return leftmost_permutive() && rightmost_permutive();
}

std::vector<Elem> LocalRule::generating_table() const {
  if (field_.q() != 2) throw ValidationError("generating function defined for binary rules only");
  if (!is_bipermutive()) throw ValidationError("generating function requires a bipermutive rule");
  const std::vector<Elem> bits = truth_table();
  const std::size_t g_size = std::size_t{1} << (diameter_ - 2);
  std::vector<Elem> g(g_size);
  for (std::size_t mid = 0; mid < g_size; ++mid) {
    g[mid] = bits[mid << 1];  // x1 = 0, xd = 0
  }
  return g;
}

bool operator==(const LocalRule& a, const LocalRule& b) {
  return a.field_ == b.field_ && a.diameter_ == b.diameter_ && a.linear_ == b.linear_ &&
         a.data_ == b.data_;
}

gf::Polynomial associated_polynomial(const LocalRule& rule) {
  if (!rule.is_linear()) throw ValidationError("associated polynomial requires a linear rule");
  return gf::Polynomial(rule.field(), rule.coefficients());
}

LocalRule rule_from_polynomial(const gf::Polynomial& p) {
  if (p.degree() < 1) throw ValidationError("rule polynomial must have degree >= 1");
  return LocalRule::linear(p.field(), p.coeffs());
}

}  // namespace moca::ca
