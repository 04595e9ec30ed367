#include "supercong/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace supercong {

FactorialTable::FactorialTable(std::uint32_t p, std::uint32_t k, std::uint64_t max_index)
    : modulus_(p, k),
      valuation_(max_index + 1, 0),
      unit_(max_index + 1, 1),
      inverse_unit_(max_index + 1, 1) {
  Residue unit = Residue::one(modulus_);
  for (std::uint64_t n = 1; n <= max_index; ++n) {
    std::uint64_t factor = n;
    std::uint64_t v = 0;
    while (factor % p == 0) {
      factor /= p;
      ++v;
    }
    valuation_[n] = valuation_[n - 1] + v;
    unit *= Residue(factor, modulus_);
    unit_[n] = unit.value();
  }
  // unit[n-1]^{-1} = unit[n]^{-1} * (n with its p-part removed)
  Residue inverse = unit.inverse();
  for (std::uint64_t n = max_index; n >= 1; --n) {
    inverse_unit_[n] = inverse.value();
    std::uint64_t factor = n;
    while (factor % p == 0) {
      factor /= p;
    }
    inverse *= Residue(factor, modulus_);
  }
  inverse_unit_[0] = 1;
}

FactorialTable build_factorial_table(std::uint32_t p, std::uint32_t k, std::uint64_t max_index) {
  return FactorialTable(p, k, max_index);
}

Residue binomial_mod(std::uint64_t n, std::int64_t m, const FactorialTable& table) {
  if (n > table.max_index()) {
    throw IndexOutOfTable("binomial upper index " + std::to_string(n) + " exceeds table size " +
                          std::to_string(table.max_index()));
  }
  const Modulus& mod = table.modulus();
  if (m < 0 || static_cast<std::uint64_t>(m) > n) {
    return Residue::zero(mod);
  }
  const auto lower = static_cast<std::uint64_t>(m);
  const std::uint64_t v = table.valuation(n) - table.valuation(lower) - table.valuation(n - lower);
  if (v >= table.k()) {
    return Residue::zero(mod);
  }
  const Residue p_power = Residue(table.p(), mod).pow(v);
  return p_power * table.unit(n) * table.inverse_unit(lower) * table.inverse_unit(n - lower);
}

MultiIndex::MultiIndex(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw ParamOutOfRange("multi-index must have at least one part");
  }
}

std::uint64_t MultiIndex::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

Residue multinomial_mod(const MultiIndex& index, const FactorialTable& table) {
  const std::uint64_t total = index.total();
  if (total > table.max_index()) {
    throw IndexOutOfTable("multinomial total " + std::to_string(total) + " exceeds table size " +
                          std::to_string(table.max_index()));
  }
  std::uint64_t v = table.valuation(total);
  Residue unit = table.unit(total);
  for (const std::uint64_t part : index.parts()) {
    v -= table.valuation(part);
    unit *= table.inverse_unit(part);
  }
  if (v >= table.k()) {
    return Residue::zero(table.modulus());
  }
  return Residue(table.p(), table.modulus()).pow(v) * unit;
}

Integer binomial_exact(std::int64_t n, std::int64_t m) {
  if (n < 0) {
    throw ParamOutOfRange("binomial_exact needs a natural upper index");
  }
  if (m < 0 || m > n) {
    return 0;
  }
  const std::int64_t lower = std::min(m, n - m);
  Integer result = 1;
  for (std::int64_t i = 1; i <= lower; ++i) {
    // result = binom(n - lower + i, i) after this step, always exact
    result *= static_cast<unsigned long>(n - lower + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

Integer multinomial_exact(std::span<const std::uint64_t> parts) {
  Integer result = 1;
  std::uint64_t running = 0;
  for (const std::uint64_t part : parts) {
    running += part;
    result *= binomial_exact(static_cast<std::int64_t>(running), static_cast<std::int64_t>(part));
  }
  return result;
}

Integer abelian_square_count(std::uint32_t alphabet, std::uint32_t n) {
  if (alphabet == 0) {
    throw ParamOutOfRange("alphabet must be nonempty");
  }
  // Weak compositions in colex order starting from (n, 0, ..., 0). The step
  // moves one unit from the first nonzero part i into part i+1 and resets the
  // remainder of part i to slot 0, which scales the multinomial by v/(w+1).
  std::vector<std::uint32_t> parts(alphabet, 0);
  parts[0] = n;
  Integer multinomial = 1;
  Integer total = 0;
  while (true) {
    total += multinomial * multinomial;
    std::uint32_t i = 0;
    while (i < alphabet && parts[i] == 0) {
      ++i;
    }
    if (i + 1 >= alphabet) {
      break;
    }
    const std::uint32_t v = parts[i];
    const std::uint32_t w = parts[i + 1];
    parts[i] = 0;
    parts[0] = v - 1;
    parts[i + 1] = w + 1;
    multinomial *= v;
    mpz_divexact_ui(multinomial.get_mpz_t(), multinomial.get_mpz_t(), w + 1);
  }
  return total;
}

Integer abelian_square_oracle(std::uint32_t alphabet, std::uint32_t n, std::uint64_t max_strings) {
  if (alphabet == 0) {
    throw ParamOutOfRange("alphabet must be nonempty");
  }
  const std::uint64_t length = 2 * static_cast<std::uint64_t>(n);
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < length; ++i) {
    if (count > max_strings / alphabet) {
      throw EnumerationTooLarge(std::to_string(alphabet) + "^" + std::to_string(length) +
                                " strings exceed the enumeration limit");
    }
    count *= alphabet;
  }
  std::vector<std::uint32_t> word(length, 0);
  std::vector<std::int64_t> balance(alphabet, 0);
  std::uint64_t squares = 0;
  for (std::uint64_t w = 0; w < count; ++w) {
    std::fill(balance.begin(), balance.end(), 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      ++balance[word[i]];
      --balance[word[n + i]];
    }
    if (std::all_of(balance.begin(), balance.end(), [](std::int64_t b) { return b == 0; })) {
      ++squares;
    }
    // odometer increment
    for (std::uint64_t pos = 0; pos < length; ++pos) {
      if (++word[pos] < alphabet) {
        break;
      }
      word[pos] = 0;
    }
  }
  return Integer(static_cast<unsigned long>(squares));
}

Integer legendre_coefficient(std::int64_t n, std::int64_t k) {
  Integer value = binomial_exact(n, k) * binomial_exact(n + k, k);
  return (n - k) % 2 == 0 ? value : Integer(-value);
}

}  // namespace supercong
