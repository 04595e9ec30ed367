#include "supercong/arith.hpp"

#include <limits>

namespace supercong {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked_power(std::uint32_t p, std::uint32_t k) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  std::uint64_t value = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (value > kLimit / p) {
      throw ParamOutOfRange("modulus " + std::to_string(p) + "^" + std::to_string(k) +
                            " exceeds 2^62");
    }
    value *= p;
  }
  return value;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

int padic_valuation(const Integer& value, std::uint32_t p) {
  if (value == 0) {
    return kInfiniteValuation;
  }
  Integer rest = abs(value);
  int v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int padic_valuation(const Rational& value, std::uint32_t p) {
  if (value == 0) {
    return kInfiniteValuation;
  }
  return padic_valuation(Integer(value.get_num()), p) - padic_valuation(Integer(value.get_den()), p);
}

bool is_p_integral(const Rational& value, std::uint32_t p) {
  return !mpz_divisible_ui_p(value.get_den_mpz_t(), p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  if (n % 2 == 0) {
    return n == 2;
  }
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // Invariant: old_s * a == old_r (mod m).
  __int128 old_r = a % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  __int128 result = old_s % static_cast<__int128>(m);
  if (result < 0) {
    result += m;
  }
  return static_cast<std::uint64_t>(result);
}

Modulus::Modulus(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), value_(0) {
  if (p < 2 || k < 1) {
    throw ParamOutOfRange("modulus needs p >= 2 and k >= 1");
  }
  value_ = checked_power(p, k);
}

Residue::Residue(std::uint64_t value, const Modulus& modulus)
    : value_(value % modulus.value()), modulus_(modulus) {}

Residue Residue::from_int(std::int64_t value, const Modulus& m) {
  const auto mod = static_cast<std::int64_t>(m.value());
  std::int64_t r = value % mod;
  if (r < 0) {
    r += mod;
  }
  return Residue(static_cast<std::uint64_t>(r), m);
}

Residue Residue::from_integer(const Integer& value, const Modulus& m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), m.value());
  return Residue(r.get_ui(), m);
}

void Residue::require_same(const Residue& rhs) const {
  if (!(modulus_ == rhs.modulus_)) {
    throw ModulusMismatch("residues mod " + std::to_string(modulus_.p()) + "^" +
                          std::to_string(modulus_.k()) + " and " + std::to_string(rhs.modulus_.p()) +
                          "^" + std::to_string(rhs.modulus_.k()) + " combined");
  }
}

Residue Residue::operator+(const Residue& rhs) const {
  require_same(rhs);
  std::uint64_t sum = value_ + rhs.value_;
  if (sum >= modulus_.value()) {
    sum -= modulus_.value();
  }
  return Residue(sum, modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
  require_same(rhs);
  const std::uint64_t diff =
      value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_.value() - rhs.value_;
  return Residue(diff, modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
  require_same(rhs);
  const u128 product = static_cast<u128>(value_) * rhs.value_;
  return Residue(static_cast<std::uint64_t>(product % modulus_.value()), modulus_);
}

Residue Residue::operator-() const { return Residue(value_ == 0 ? 0 : modulus_.value() - value_, modulus_); }

Residue Residue::pow(std::uint64_t exponent) const {
  Residue result = one(modulus_);
  Residue base = *this;
  while (exponent > 0) {
    if (exponent & 1) {
      result *= base;
    }
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Residue Residue::inverse() const { return Residue(inverse_mod(value_, modulus_.value()), modulus_); }

Residue Residue::reduced(std::uint32_t new_k) const {
  if (new_k > modulus_.k()) {
    throw ParamOutOfRange("cannot lift a residue to a higher power");
  }
  return Residue(value_, Modulus(modulus_.p(), new_k));
}

std::string to_string(const Residue& r) { return std::to_string(r.value()); }

Residue make_residue(const Rational& q, const Modulus& m) {
  if (mpz_divisible_ui_p(q.get_den_mpz_t(), m.p())) {
    throw PDividesDenominator(to_string(q) + " has a denominator divisible by " +
                              std::to_string(m.p()));
  }
  const Residue num = Residue::from_integer(Integer(q.get_num()), m);
  const Residue den = Residue::from_integer(Integer(q.get_den()), m);
  return num * den.inverse();
}

Residue make_residue(const Rational& q, std::uint32_t p, std::uint32_t k) {
  return make_residue(q, Modulus(p, k));
}

Integer fermat_quotient_exact(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) {
    throw ParamOutOfRange("Fermat quotient q_p(2) needs an odd p");
  }
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, p - 1);
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), Integer(power - 1).get_mpz_t(), p);
  return q;
}

Residue fermat_quotient(std::uint32_t p, std::uint32_t k) {
  return Residue::from_integer(fermat_quotient_exact(p), Modulus(p, k));
}

int legendre(const Integer& a, std::uint32_t p) {
  if (p < 3 || !is_prime(p)) {
    throw ParamOutOfRange("Legendre symbol needs an odd prime");
  }
  const Modulus mod(p, 1);
  const Residue base = Residue::from_integer(a, mod);
  if (base.is_zero()) {
    return 0;
  }
  return base.pow((p - 1) / 2).value() == 1 ? 1 : -1;
}

}  // namespace supercong
