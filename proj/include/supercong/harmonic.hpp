#pragma once

#include <cstdint>
#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

/// Exponents (s_1, ..., s_r) of a multiple harmonic sum together with the
/// parameter x. A negative exponent attaches x^{k_i} to its index.
class HarmonicSignature {
 public:
  explicit HarmonicSignature(std::vector<int> exponents, Rational x = 1);

  const std::vector<int>& exponents() const { return exponents_; }
  const Rational& x() const { return x_; }
  std::size_t depth() const { return exponents_.size(); }
  unsigned weight() const;

 private:
  std::vector<int> exponents_;
  Rational x_;
};

/// H_n(s; x) = sum over 1 <= k_1 < ... < k_r <= n of prod x_i^{k_i} / k_i^{|s_i|}.
/// Zero when n < r.
Rational harmonic_eval_exact(std::uint64_t n, const HarmonicSignature& signature);

/// Same sum computed in Z/p^kZ. Requires n < p so no index is divisible by p.
Residue harmonic_eval_mod(std::uint64_t n, const HarmonicSignature& signature, std::uint32_t p,
                          std::uint32_t k);

/// H_0, H_1, ..., H_n as exact rationals.
std::vector<Rational> harmonic_numbers(std::uint64_t n);

Rational harmonic_number(std::uint64_t n);

}  // namespace supercong
