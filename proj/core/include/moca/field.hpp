#ifndef MOCA_FIELD_HPP
#define MOCA_FIELD_HPP

#include <cstdint>

#include "moca/errors.hpp"

namespace moca::gf {

using Elem = std::uint32_t;

/// The prime field F_q. Elements are the residues 0..q-1.
class FieldSpec {
 public:
  explicit FieldSpec(Elem q);

  Elem q() const noexcept { return q_; }

  Elem add(Elem a, Elem b) const noexcept { return (a + b) % q_; }
  Elem sub(Elem a, Elem b) const noexcept { return (a + q_ - b % q_) % q_; }
  Elem neg(Elem a) const noexcept { return (q_ - a % q_) % q_; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool contains(Elem a) const noexcept { return a < q_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  Elem q_;
};

bool is_prime(Elem n) noexcept;

/// q^k with an overflow check (throws ValidationError past 2^63).
std::uint64_t pow_u64(std::uint64_t q, unsigned k);

}  // namespace moca::gf

#endif
