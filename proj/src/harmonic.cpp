#include "supercong/harmonic.hpp"

#include <cstdlib>
#include <string>

namespace supercong {

HarmonicSignature::HarmonicSignature(std::vector<int> exponents, Rational x)
    : exponents_(std::move(exponents)), x_(std::move(x)) {
  if (exponents_.empty()) {
    throw ParamOutOfRange("harmonic signature must have depth >= 1");
  }
  for (const int s : exponents_) {
    if (s == 0) {
      throw ParamOutOfRange("harmonic signature exponents must be nonzero");
    }
  }
  x_.canonicalize();
}

unsigned HarmonicSignature::weight() const {
  unsigned total = 0;
  for (const int s : exponents_) {
    total += static_cast<unsigned>(std::abs(s));
  }
  return total;
}

namespace {

// Prefix dynamic program: after processing index k, level[j] holds the sum
// over chains k_1 < ... < k_j <= k of the first j factors.
template <typename Value, typename TermFn>
Value chain_sum(std::uint64_t n, std::size_t depth, Value zero, Value one, TermFn term) {
  std::vector<Value> level(depth + 1, zero);
  level[0] = one;
  for (std::uint64_t k = 1; k <= n; ++k) {
    for (std::size_t j = depth; j >= 1; --j) {
      level[j] += level[j - 1] * term(j - 1, k);
    }
  }
  return level[depth];
}

}  // namespace

Rational harmonic_eval_exact(std::uint64_t n, const HarmonicSignature& signature) {
  const auto& exps = signature.exponents();
  const Rational& x = signature.x();
  Rational x_power = 1;
  std::uint64_t x_power_index = 0;
  return chain_sum<Rational>(n, exps.size(), Rational(0), Rational(1),
                             [&](std::size_t slot, std::uint64_t k) {
                               Integer denominator;
                               mpz_ui_pow_ui(denominator.get_mpz_t(), k,
                                             static_cast<unsigned long>(std::abs(exps[slot])));
                               Rational term(Integer(1), denominator);
                               if (exps[slot] < 0) {
                                 while (x_power_index < k) {
                                   x_power *= x;
                                   ++x_power_index;
                                 }
                                 term *= x_power;
                               }
                               return term;
                             });
}

Residue harmonic_eval_mod(std::uint64_t n, const HarmonicSignature& signature, std::uint32_t p,
                          std::uint32_t k) {
  const Modulus mod(p, k);
  if (n >= p) {
    throw IndexRangeTooLarge("harmonic_eval_mod needs n < p (n = " + std::to_string(n) +
                             ", p = " + std::to_string(p) + ")");
  }
  const Residue x = make_residue(signature.x(), mod);
  std::vector<Residue> inverses;
  std::vector<Residue> x_powers;
  inverses.reserve(n + 1);
  x_powers.reserve(n + 1);
  inverses.push_back(Residue::zero(mod));
  x_powers.push_back(Residue::one(mod));
  for (std::uint64_t i = 1; i <= n; ++i) {
    inverses.push_back(Residue(i, mod).inverse());
    x_powers.push_back(x_powers.back() * x);
  }
  const auto& exps = signature.exponents();
  return chain_sum<Residue>(n, exps.size(), Residue::zero(mod), Residue::one(mod),
                            [&](std::size_t slot, std::uint64_t index) {
                              Residue term =
                                  inverses[index].pow(static_cast<std::uint64_t>(std::abs(exps[slot])));
                              if (exps[slot] < 0) {
                                term *= x_powers[index];
                              }
                              return term;
                            });
}

std::vector<Rational> harmonic_numbers(std::uint64_t n) {
  std::vector<Rational> values;
  values.reserve(n + 1);
  values.emplace_back(0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    values.push_back(values.back() + Rational(Integer(1), Integer(static_cast<unsigned long>(k))));
  }
  return values;
}

Rational harmonic_number(std::uint64_t n) { return harmonic_numbers(n).back(); }

}  // namespace supercong
