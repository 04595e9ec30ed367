#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "supercong/errors.hpp"

namespace supercong {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

inline constexpr int kInfiniteValuation = 1 << 30;

/// Exponent of p in value; kInfiniteValuation for zero.
int padic_valuation(const Integer& value, std::uint32_t p);
int padic_valuation(const Rational& value, std::uint32_t p);
bool is_p_integral(const Rational& value, std::uint32_t p);

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Inverse of a modulo m by the extended Euclidean algorithm.
/// Throws NotInvertible when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// The modulus p^k of a residue ring. p^k must stay below 2^62 so that
/// products fit in 128 bits.
class Modulus {
 public:
  Modulus(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t value() const { return value_; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t value_;
};

/// An element of Z/p^kZ. Arithmetic between residues of different moduli
/// throws ModulusMismatch.
class Residue {
 public:
  Residue(std::uint64_t value, const Modulus& modulus);

  static Residue zero(const Modulus& m) { return Residue(0, m); }
  static Residue one(const Modulus& m) { return Residue(1, m); }
  static Residue from_int(std::int64_t value, const Modulus& m);
  static Residue from_integer(const Integer& value, const Modulus& m);

  std::uint64_t value() const { return value_; }
  const Modulus& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return value_ % modulus_.p() != 0; }

  Residue operator+(const Residue& rhs) const;
  Residue operator-(const Residue& rhs) const;
  Residue operator*(const Residue& rhs) const;
  Residue operator-() const;
  Residue& operator+=(const Residue& rhs) { return *this = *this + rhs; }
  Residue& operator-=(const Residue& rhs) { return *this = *this - rhs; }
  Residue& operator*=(const Residue& rhs) { return *this = *this * rhs; }

  Residue pow(std::uint64_t exponent) const;
  Residue inverse() const;

  /// Image under Z/p^kZ -> Z/p^jZ for j <= k.
  Residue reduced(std::uint32_t new_k) const;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  void require_same(const Residue& rhs) const;

  std::uint64_t value_;
  Modulus modulus_;
};

std::string to_string(const Residue& r);

/// num * den^{-1} mod p^k. Throws PDividesDenominator when p | den.
Residue make_residue(const Rational& q, std::uint32_t p, std::uint32_t k);
Residue make_residue(const Rational& q, const Modulus& m);

/// The exact integer (2^{p-1} - 1)/p for an odd prime p.
Integer fermat_quotient_exact(std::uint32_t p);
Residue fermat_quotient(std::uint32_t p, std::uint32_t k);

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
int legendre(const Integer& a, std::uint32_t p);

}  // namespace supercong
