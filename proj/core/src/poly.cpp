#include "moca/poly.hpp"

#include <algorithm>
#include <string>

namespace moca::gf {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) {
    throw ValidationError("polynomial field mismatch");
  }
}

}  // namespace

Polynomial::Polynomial(FieldSpec field, std::vector<Elem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (Elem& c : coeffs_) {
    c %= field_.q();
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  const Elem inv = field_.inv(leading());
  std::vector<Elem> c(coeffs_);
  for (Elem& v : c) v = field_.mul(v, inv);
  return Polynomial(field_, std::move(c));
}

std::uint64_t Polynomial::canonical_key() const {
  std::uint64_t key = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    key = key * field_.q() + coeffs_[i];
  }
  return key;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.field().add(a.coeff(i), b.coeff(i));
  }
  return Polynomial(a.field(), std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.field().sub(a.coeff(i), b.coeff(i));
  }
  return Polynomial(a.field(), std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field());
  std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = a.field().add(c[i + j], a.field().mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Polynomial(a.field(), std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field() == b.field() && a.coeffs() == b.coeffs();
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  const FieldSpec& f = a.field();
  std::vector<Elem> rem(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial::zero(f), a};
  std::vector<Elem> quo(a.degree() - db + 1, 0);
  const Elem lead_inv = f.inv(b.leading());
  for (int k = a.degree() - db; k >= 0; --k) {
    const Elem c = f.mul(rem[k + db], lead_inv);
    if (c == 0) continue;
    quo[k] = c;
    for (int i = 0; i <= db; ++i) {
      rem[k + i] = f.sub(rem[k + i], f.mul(c, b.coeff(i)));
    }
  }
  return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

bool divides(const Polynomial& d, const Polynomial& a) {
  return poly_divmod(a, d).second.is_zero();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) {
    throw ValidationError("gcd of two zero polynomials is undefined");
  }
  Polynomial u = a, v = b;
  while (!v.is_zero()) {
    Polynomial r = poly_divmod(u, v).second;
    u = v;
    v = std::move(r);
  }
  return u.monic();
}

Polynomial poly_powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m) {
  Polynomial base = poly_divmod(a, m).second;
  Polynomial result = Polynomial::one(a.field());
  while (e > 0) {
    if (e & 1) result = poly_divmod(result * base, m).second;
    base = poly_divmod(base * base, m).second;
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Polynomial& p) {
  const int n = p.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree up to n/2.
  const FieldSpec& f = p.field();
  const Elem q = f.q();
  for (int k = 1; k <= n / 2; ++k) {
    const std::uint64_t count = pow_u64(q, static_cast<unsigned>(k));
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<Elem> c(static_cast<std::size_t>(k) + 1);
      std::uint64_t v = t;
      for (int i = 0; i < k; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<Elem>(v % q);
        v /= q;
      }
      c[static_cast<std::size_t>(k)] = 1;
      if (divides(Polynomial(f, std::move(c)), p)) return false;
    }
  }
  return true;
}

std::vector<Polynomial> irreducibles(FieldSpec field, unsigned k, bool nonzero_constant) {
  if (k == 0) throw ValidationError("irreducible degree must be >= 1");
  const Elem q = field.q();
  const std::uint64_t count = pow_u64(q, k);
  std::vector<Polynomial> out;
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<Elem> c(k + 1);
    std::uint64_t v = t;
    for (unsigned i = 0; i < k; ++i) {
      c[i] = static_cast<Elem>(v % q);
      v /= q;
    }
    c[k] = 1;
    Polynomial p(field, std::move(c));
    if (nonzero_constant && p.constant_term() == 0) continue;
    if (is_irreducible(p)) out.push_back(std::move(p));
  }
  // Enumeration order is already canonical (ascending base-q key).
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_primitive(const Polynomial& p) {
  if (!is_irreducible(p)) throw ValidationError("primitivity requires an irreducible polynomial");
  if (!p.is_monic() || p.constant_term() == 0) {
    throw ValidationError("primitivity requires a monic polynomial with nonzero constant term");
  }
  const unsigned n = static_cast<unsigned>(p.degree());
  const std::uint64_t group = pow_u64(p.field().q(), n) - 1;
  // A root alpha = X mod p has order dividing q^n - 1; it is primitive iff
  // alpha^( (q^n-1)/r ) != 1 for every prime r of the group order.
  const Polynomial x = Polynomial::x(p.field());
  const Polynomial one = Polynomial::one(p.field());
  for (std::uint64_t r : prime_factors(group)) {
    if (poly_powmod(x, group / r, p) == one) return false;
  }
  return true;
}

}  // namespace moca::gf
