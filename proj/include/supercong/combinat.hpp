#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

/// p-adic factorial decomposition n! = p^{val[n]} * unit[n] for 0 <= n <= N,
/// with the unit part kept mod p^k. Built in one forward pass; immutable.
class FactorialTable {
 public:
  FactorialTable(std::uint32_t p, std::uint32_t k, std::uint64_t max_index);

  std::uint32_t p() const { return modulus_.p(); }
  std::uint32_t k() const { return modulus_.k(); }
  const Modulus& modulus() const { return modulus_; }
  std::uint64_t max_index() const { return valuation_.size() - 1; }

  std::uint64_t valuation(std::uint64_t n) const { return valuation_.at(n); }
  Residue unit(std::uint64_t n) const { return Residue(unit_.at(n), modulus_); }
  Residue inverse_unit(std::uint64_t n) const { return Residue(inverse_unit_.at(n), modulus_); }

 private:
  Modulus modulus_;
  std::vector<std::uint64_t> valuation_;
  std::vector<std::uint64_t> unit_;
  std::vector<std::uint64_t> inverse_unit_;
};

FactorialTable build_factorial_table(std::uint32_t p, std::uint32_t k, std::uint64_t max_index);

/// binom(n, m) mod p^k; zero outside 0 <= m <= n. Throws IndexOutOfTable when n > N.
Residue binomial_mod(std::uint64_t n, std::int64_t m, const FactorialTable& table);

/// Parts (m_1, ..., m_n) of a multinomial coefficient.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<std::uint64_t> parts);
  MultiIndex(std::initializer_list<std::uint64_t> parts)
      : MultiIndex(std::vector<std::uint64_t>(parts)) {}

  std::span<const std::uint64_t> parts() const { return parts_; }
  std::uint64_t total() const;

 private:
  std::vector<std::uint64_t> parts_;
};

/// (sum m_i)! / prod m_i! mod p^k.
Residue multinomial_mod(const MultiIndex& index, const FactorialTable& table);

/// Exact binomial by the multiplicative formula; zero for m < 0 or m > n.
Integer binomial_exact(std::int64_t n, std::int64_t m);
Integer multinomial_exact(std::span<const std::uint64_t> parts);

/// f_k(n): sum over weak compositions n_1 + ... + n_k = n of multinomial^2.
Integer abelian_square_count(std::uint32_t alphabet, std::uint32_t n);

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 24;

/// Counts strings of length 2n over the alphabet whose second half is an
/// anagram of the first, by enumerating every string.
Integer abelian_square_oracle(std::uint32_t alphabet, std::uint32_t n,
                              std::uint64_t max_strings = kDefaultEnumerationLimit);

/// T(n, k) = (-1)^{n-k} binom(n, k) binom(n+k, k), the coefficients of the
/// shifted Legendre polynomial of degree n.
Integer legendre_coefficient(std::int64_t n, std::int64_t k);

}  // namespace supercong
