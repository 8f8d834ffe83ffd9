#include "moca/field.hpp"

#include <string>

namespace moca::gf {

bool is_prime(Elem n) noexcept {
  if (n < 2) return false;
  for (Elem d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(Elem q) : q_(q) {
  if (!is_prime(q)) {
    throw ValidationError("field modulus must be prime, got " + std::to_string(q));
  }
}

Elem FieldSpec::inv(Elem a) const {
  a %= q_;
  if (a == 0) throw ValidationError("division by zero in F_" + std::to_string(q_));
  // Fermat: a^(q-2). q is small, so a simple square-and-multiply suffices.
  std::uint64_t base = a, result = 1;
  Elem e = q_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

std::uint64_t pow_u64(std::uint64_t q, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 63) / q) {
      throw ValidationError("q^k exceeds 64-bit range");
    }
    r *= q;
  }
  return r;
}

}  // namespace moca::gf
