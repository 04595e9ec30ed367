#include "supercong/congruences.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "supercong/combinat.hpp"

namespace supercong {

namespace {

const std::vector<HarmonicCongruenceSpec>& catalog() {
  static const std::vector<HarmonicCongruenceSpec> specs = [] {
    const Rational zero = 0;
    const Rational half = make_rational(1, 2);
    std::vector<HarmonicCongruenceSpec> v;
    using Id = HarmonicCongruenceId;
    v.push_back({Id::C1, HarmonicSignature({1}), 2, {zero, zero, zero}, 5});
    v.push_back({Id::C2, HarmonicSignature({2}), 1, {zero, zero, zero}, 5});
    v.push_back({Id::C3, HarmonicSignature({1, 1}), 1, {zero, zero, zero}, 5});
    v.push_back({Id::C4, HarmonicSignature({-1}, 2), 2, {zero, Rational(-2), zero}, 5});
    v.push_back({Id::C44, HarmonicSignature({-1}, half), 1, {zero, Rational(1), zero}, 5});
    v.push_back({Id::C66, HarmonicSignature({-2}, -1), 1, {zero, zero, zero}, 5});
    v.push_back({Id::C10, HarmonicSignature({-2}, 2), 1, {zero, zero, Rational(-1)}, 5});
    v.push_back({Id::C55, HarmonicSignature({1, -1}, -1), 1, {zero, zero, Rational(1)}, 5});
    v.push_back({Id::C5, HarmonicSignature({1, -1}, 2), 1, {zero, zero, zero}, 5});
    v.push_back({Id::C6, HarmonicSignature({-1, 1}, half), 1, {zero, zero, zero}, 5});
    return v;
  }();
  return specs;
}

constexpr std::array<std::string_view, 10> kHarmonicNames = {"C1",  "C2",  "C3",  "C4", "C44",
                                                             "C66", "C10", "C55", "C5", "C6"};

constexpr std::array kLemmas = {LemmaId::B1,         LemmaId::B2,           LemmaId::C7,
                                LemmaId::BINOM_P_R,  LemmaId::WOLSTENHOLME, LemmaId::LUCAS_STEP,
                                LemmaId::K_PLUS_P,   LemmaId::ZHS,          LemmaId::HALF_HARMONIC,
                                LemmaId::BINOM_PM1,  LemmaId::BINOM_P_SIGN, LemmaId::POWER_SUM,
                                LemmaId::MID_CENTRAL, LemmaId::CENTRAL_SUM};

constexpr std::array<std::string_view, kLemmas.size()> kLemmaNames = {
    "B1",  "B2",            "C7",        "BINOM_P_R",    "WOLSTENHOLME", "LUCAS_STEP",  "K_PLUS_P",
    "ZHS", "HALF_HARMONIC", "BINOM_PM1", "BINOM_P_SIGN", "POWER_SUM",    "MID_CENTRAL", "CENTRAL_SUM"};

constexpr std::array kCC = {CCId::CC22, CCId::CC2, CCId::CC1, CCId::CC11};
constexpr std::array<std::string_view, 4> kCCNames = {"CC22", "CC2", "CC1", "CC11"};

template <typename Enum, std::size_t N>
Enum lookup(const std::array<std::string_view, N>& names, std::string_view name, std::string_view kind) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) {
      return static_cast<Enum>(i);
    }
  }
  throw UnknownId("unknown " + std::string(kind) + " '" + std::string(name) + "'");
}

Integer p_power(std::uint32_t p, unsigned e) {
  Integer value;
  mpz_ui_pow_ui(value.get_mpz_t(), p, e);
  return value;
}

Rational two_power(std::int64_t e) {
  Integer value;
  mpz_ui_pow_ui(value.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rational(value);
}

Integer sign(std::int64_t exponent) { return exponent % 2 == 0 ? Integer(1) : Integer(-1); }

Rational inverse_of(std::int64_t k) { return make_rational(1, k); }

std::int64_t ranged(const Params& params, const std::string& key, std::int64_t lo, std::int64_t hi) {
  const std::int64_t value = params.get(key);
  if (value < lo || value > hi) {
    throw ParamOutOfRange(key + " = " + std::to_string(value) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  }
  return value;
}

// Reduces an exact rational that must be p-integral.
Residue reduce_integral(const Rational& value, const Modulus& mod) {
  if (!is_p_integral(value, mod.p())) {
    throw PIntegralityViolation(to_string(value) + " is not " + std::to_string(mod.p()) + "-integral");
  }
  return make_residue(value, mod);
}

CheckReport lemma_report(LemmaId id, std::uint32_t p, const Params& params, const Residue& lhs,
                         const Residue& rhs) {
  return congruence_report("congruences", std::string(to_string(id)), p, params, lhs, rhs);
}

CheckReport check_b1_b2(LemmaId id, std::uint32_t p) {
  // B1: sum_{k<p} 1/(k 2^k) sum_{j<k} 2^j/j;  B2: sum_{k<p} 2^k/k sum_{j<k} 1/(j 2^j)
  const Modulus mod(p, 1);
  Rational inner = 0;
  Rational total = 0;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(p) - 1; ++k) {
    const Rational outer_weight = id == LemmaId::B1 ? Rational(1 / (Rational(k) * two_power(k))) : Rational(two_power(k) / Rational(k));
    total += outer_weight * inner;
    inner += id == LemmaId::B1 ? Rational(two_power(k) / Rational(k)) : Rational(1 / (Rational(k) * two_power(k)));
  }
  const Residue q = fermat_quotient(p, 1);
  const Residue target = id == LemmaId::B1 ? Residue::zero(mod) : -(Residue(2, mod) * q * q);
  return lemma_report(id, p, {}, make_residue(total, mod), target);
}

CheckReport check_c7(std::uint32_t p) {
  // Every binom(m, k) with m < p is a p-adic unit, so each exact term is
  // reduced on its own and the residues summed.
  const Modulus mod(p, 1);
  Residue total = Residue::zero(mod);
  for (std::int64_t k = 2; k <= static_cast<std::int64_t>(p) - 1; ++k) {
    Residue inner = Residue::zero(mod);
    Integer binom = 1;  // binom(m, k) at m = k
    for (std::int64_t m = k; m <= static_cast<std::int64_t>(p) - 1; ++m) {
      const Residue term = make_residue(Rational(sign(m - k)) / Rational(binom), mod);
      inner += term;
      binom *= static_cast<unsigned long>(m + 1);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(m + 1 - k));
    }
    total += make_residue(make_rational(1, k * k), mod) * inner;
  }
  const Residue target = -(Residue(2, mod) * fermat_quotient(p, 1));
  return lemma_report(LemmaId::C7, p, {}, total, target);
}

}  // namespace

std::string_view to_string(HarmonicCongruenceId id) { return kHarmonicNames[static_cast<std::size_t>(id)]; }

HarmonicCongruenceId harmonic_congruence_from_string(std::string_view name) {
  return lookup<HarmonicCongruenceId>(kHarmonicNames, name, "harmonic congruence");
}

std::span<const HarmonicCongruenceSpec> harmonic_congruence_catalog() { return catalog(); }

const HarmonicCongruenceSpec& harmonic_congruence_spec(HarmonicCongruenceId id) {
  return catalog()[static_cast<std::size_t>(id)];
}

CheckReport check_harmonic_congruence(HarmonicCongruenceId id, std::uint32_t p) {
  const HarmonicCongruenceSpec& spec = harmonic_congruence_spec(id);
  require_odd_prime(p, spec.min_prime);
  const Modulus mod(p, spec.exponent);
  const Rational exact = harmonic_eval_exact(p - 1, spec.signature);
  const Residue lhs = make_residue(exact, mod);
  const Residue fast = harmonic_eval_mod(p - 1, spec.signature, p, spec.exponent);
  const Rational q(fermat_quotient_exact(p));
  const Rational target = spec.target[0] + spec.target[1] * q + spec.target[2] * q * q;
  CheckReport report = congruence_report("congruences", std::string(to_string(id)), p, {}, lhs,
                                         make_residue(target, mod));
  if (!(fast == lhs)) {
    report.status = Status::fail;
    report.note = "modular evaluator gave " + to_string(fast);
  }
  return report;
}

std::string_view to_string(LemmaId id) { return kLemmaNames[static_cast<std::size_t>(id)]; }

LemmaId lemma_from_string(std::string_view name) { return lookup<LemmaId>(kLemmaNames, name, "lemma"); }

std::span<const LemmaId> all_lemmas() { return kLemmas; }

std::uint32_t min_prime(LemmaId id) {
  // Wolstenholme's theorem mod p^3 needs p > 3; the rest are stated for p > 2.
  return id == LemmaId::WOLSTENHOLME ? 5 : 3;
}

CheckReport check_lemma_congruence(LemmaId id, std::uint32_t p, const Params& params) {
  require_odd_prime(p, min_prime(id));
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t half = (pp - 1) / 2;
  const Rational q(fermat_quotient_exact(p));
  const Rational prime(pp);

  switch (id) {
    case LemmaId::B1:
    case LemmaId::B2:
      return check_b1_b2(id, p);
    case LemmaId::C7:
      return check_c7(p);
    case LemmaId::BINOM_P_R: {
      const std::int64_t r = ranged(params, "r", 1, pp - 1);
      const Modulus mod(p, 3);
      const Rational rhs = prime * Rational(sign(r - 1)) * (1 - prime * harmonic_number(r - 1)) / Rational(r);
      return lemma_report(id, p, params, Residue::from_integer(binomial_exact(pp, r), mod),
                          make_residue(rhs, mod));
    }
    case LemmaId::WOLSTENHOLME: {
      const std::int64_t a = ranged(params, "a", 0, 1 << 20);
      const std::int64_t b = ranged(params, "b", 0, a);
      const Modulus mod(p, 3);
      return lemma_report(id, p, params, Residue::from_integer(binomial_exact(a * pp, b * pp), mod),
                          Residue::from_integer(binomial_exact(a, b), mod));
    }
    case LemmaId::LUCAS_STEP: {
      const std::int64_t n1 = ranged(params, "n1", 0, 1 << 20);
      const std::int64_t n0 = ranged(params, "n0", 0, pp - 1);
      const std::int64_t k1 = ranged(params, "k1", 0, 1 << 20);
      const std::int64_t k0 = ranged(params, "k0", 0, pp - 1);
      const Modulus mod(p, 1);
      return lemma_report(id, p, params, Residue::from_integer(binomial_exact(n1 * pp + n0, k1 * pp + k0), mod),
                          Residue::from_integer(binomial_exact(n1, k1) * binomial_exact(n0, k0), mod));
    }
    case LemmaId::K_PLUS_P: {
      const std::int64_t k = ranged(params, "k", 0, pp - 2);
      const std::int64_t m = ranged(params, "m", k + 1, pp - 1);
      const Modulus mod(p, 2);
      const Rational rhs = prime * Rational(sign(m - k - 1)) / (Rational(k + 1) * Rational(binomial_exact(m, k + 1)));
      return lemma_report(id, p, params, Residue::from_integer(binomial_exact(k + pp, m), mod),
                          make_residue(rhs, mod));
    }
    case LemmaId::ZHS: {
      const std::int64_t a = ranged(params, "a", 0, half);
      const Modulus mod(p, 2);
      const auto h = harmonic_numbers(static_cast<std::uint64_t>(2 * a));
      const Rational rhs = Rational(sign(a) * binomial_exact(half, a)) * (1 + prime * (2 * h[2 * a] - h[a]));
      return lemma_report(id, p, params, Residue::from_integer(binomial_exact(half + a, half), mod),
                          make_residue(rhs, mod));
    }
    case LemmaId::HALF_HARMONIC: {
      const std::int64_t part = ranged(params, "part", 1, 2);
      const Modulus mod(p, 1);
      const std::int64_t n = part == 1 ? half : half / 2;
      const Rational target = part == 1 ? Rational(-2 * q) : Rational(-3 * q);
      return lemma_report(id, p, params, make_residue(harmonic_number(n), mod), make_residue(target, mod));
    }
    case LemmaId::BINOM_PM1: {
      const std::int64_t j = ranged(params, "j", 0, pp - 1);
      const Modulus mod(p, 2);
      const Rational rhs = Rational(sign(j)) * (1 - prime * harmonic_number(j));
      return lemma_report(id, p, params, Residue::from_integer(binomial_exact(pp - 1, j), mod),
                          make_residue(rhs, mod));
    }
    case LemmaId::BINOM_P_SIGN: {
      const std::int64_t r = ranged(params, "r", 1, pp - 1);
      const Modulus mod(p, 2);
      const Rational rhs = Rational(sign(r - 1)) * prime / Rational(r);
      return lemma_report(id, p, params, Residue::from_integer(binomial_exact(pp, r), mod),
                          make_residue(rhs, mod));
    }
    case LemmaId::POWER_SUM: {
      const std::int64_t i = ranged(params, "i", 0, 1 << 16);
      if (i % (pp - 1) == 0) {
        throw ParamOutOfRange("POWER_SUM needs (p-1) not dividing i");
      }
      const Modulus mod(p, 1);
      Integer sum = 0;
      for (std::int64_t a = 1; a <= pp - 1; ++a) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(i));
        sum += power;
      }
      return lemma_report(id, p, params, Residue::from_integer(sum, mod), Residue::zero(mod));
    }
    case LemmaId::MID_CENTRAL: {
      // binom(2c,c) (1 - p H_{2c}): exactly one index in 1..2c is divisible
      // by p, so the product is p-integral once formed exactly.
      const std::int64_t c = ranged(params, "c", half + 1, pp - 1);
      const Modulus mod(p, 2);
      const Rational value = Rational(binomial_exact(2 * c, c)) * (1 - prime * harmonic_number(2 * c));
      return lemma_report(id, p, params, reduce_integral(value, mod), Residue::zero(mod));
    }
    case LemmaId::CENTRAL_SUM: {
      const Modulus mod(p, 2);
      Integer sum = 0;
      Integer central = 1;  // binom(2k, k) at k = 0
      for (std::int64_t k = 0; k <= pp - 1; ++k) {
        sum += central;
        central *= static_cast<unsigned long>(2 * (2 * k + 1));
        mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(k + 1));
      }
      return lemma_report(id, p, params, Residue::from_integer(sum, mod),
                          Residue::from_int(legendre(Integer(static_cast<long>(p)), 3), mod));
    }
  }
  throw UnknownId("unhandled lemma");
}

std::vector<std::int64_t> index_spread(std::uint32_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  std::vector<std::int64_t> out;
  if (p <= 31) {
    for (std::int64_t i = 0; i < pp; ++i) {
      out.push_back(i);
    }
    return out;
  }
  const std::int64_t half = (pp - 1) / 2;
  std::set<std::int64_t> picks = {0, 1, 2, 3, half - 1, half, half + 1, pp - 3, pp - 2, pp - 1};
  for (const std::int64_t v : picks) {
    if (v >= 0 && v < pp) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Params> lemma_parameter_grid(LemmaId id, std::uint32_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t half = (pp - 1) / 2;
  std::vector<Params> grid;
  switch (id) {
    case LemmaId::B1:
    case LemmaId::B2:
    case LemmaId::C7:
    case LemmaId::CENTRAL_SUM:
      grid.emplace_back();
      break;
    case LemmaId::BINOM_P_R:
    case LemmaId::BINOM_P_SIGN:
      for (std::int64_t r = 1; r < pp; ++r) {
        grid.push_back(Params{{"r", r}});
      }
      break;
    case LemmaId::WOLSTENHOLME:
      for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t b = 0; b <= a; ++b) {
          grid.push_back(Params{{"a", a}, {"b", b}});
        }
      }
      break;
    case LemmaId::LUCAS_STEP: {
      const auto low = index_spread(p);
      for (std::int64_t n1 = 0; n1 <= 2; ++n1) {
        for (std::int64_t k1 = 0; k1 <= 2; ++k1) {
          for (const std::int64_t n0 : low) {
            for (const std::int64_t k0 : low) {
              grid.push_back(Params{{"n1", n1}, {"n0", n0}, {"k1", k1}, {"k0", k0}});
            }
          }
        }
      }
      break;
    }
    case LemmaId::K_PLUS_P: {
      const auto spread = index_spread(p);
      for (const std::int64_t k : spread) {
        for (const std::int64_t m : spread) {
          if (k < m) {
            grid.push_back(Params{{"k", k}, {"m", m}});
          }
        }
      }
      break;
    }
    case LemmaId::ZHS:
      for (std::int64_t a = 0; a <= half; ++a) {
        grid.push_back(Params{{"a", a}});
      }
      break;
    case LemmaId::HALF_HARMONIC:
      grid.push_back(Params{{"part", 1}});
      grid.push_back(Params{{"part", 2}});
      break;
    case LemmaId::BINOM_PM1:
      for (std::int64_t j = 0; j < pp; ++j) {
        grid.push_back(Params{{"j", j}});
      }
      break;
    case LemmaId::POWER_SUM:
      for (std::int64_t i = 1; i <= pp - 2; ++i) {
        grid.push_back(Params{{"i", i}});
      }
      break;
    case LemmaId::MID_CENTRAL:
      for (std::int64_t c = half + 1; c <= pp - 1; ++c) {
        grid.push_back(Params{{"c", c}});
      }
      break;
  }
  return grid;
}

std::string_view to_string(CCId id) { return kCCNames[static_cast<std::size_t>(id)]; }

CCId cc_from_string(std::string_view name) { return lookup<CCId>(kCCNames, name, "CC lemma"); }

std::span<const CCId> all_cc() { return kCC; }

CheckReport check_cc(CCId id, std::uint32_t p, std::uint32_t i, std::uint32_t j, const Params& extra) {
  require_odd_prime(p, 3);
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t ii = i;
  const std::int64_t jj = j;
  const std::int64_t s = ii + jj;
  const Rational prime(pp);
  const Integer choose_ij = binomial_exact(s, ii);

  Params params{{"i", ii}, {"j", jj}};
  for (const auto& [key, value] : extra.entries()) {
    params.set(key, value);
  }
  auto report = [&](std::uint32_t k, const Rational& lhs, const Rational& rhs) {
    const Modulus mod(p, k);
    return congruence_report("congruences", std::string(to_string(id)), p, params, reduce_integral(lhs, mod),
                             reduce_integral(rhs, mod));
  };

  switch (id) {
    case CCId::CC22: {
      const std::int64_t r = ranged(extra, "r", 1, pp - 1);
      const Rational lhs(binomial_exact(s * pp, r + ii * pp));
      const Rational rhs = Rational(choose_ij * binomial_exact(pp, r) * jj) *
                           (1 - prime * (Rational(s - 1) * harmonic_number(r - 1) + make_rational(ii, r)));
      return report(3, lhs, rhs);
    }
    case CCId::CC2: {
      Integer lhs = 0;
      for (std::int64_t m = 0; m <= pp - 1; ++m) {
        lhs += binomial_exact(pp - 1 + s * pp, m + ii * pp);
      }
      const Rational q(fermat_quotient_exact(p));
      const Rational rhs = Rational(choose_ij) * (1 + Rational(s + 1) * prime * q +
                                                  Rational(binomial_exact(s + 1, 2)) * prime * prime * q * q);
      return report(3, Rational(lhs), rhs);
    }
    case CCId::CC1: {
      const std::int64_t k = ranged(extra, "k", 0, pp - 1);
      const std::int64_t m = ranged(extra, "m", 0, k);
      const auto h = harmonic_numbers(static_cast<std::uint64_t>(k));
      const Rational lhs(binomial_exact(k + s * pp, m + ii * pp));
      const Rational rhs = Rational(choose_ij * binomial_exact(k, m)) *
                           (1 + prime * (Rational(s) * h[k] - Rational(jj) * h[k - m] - Rational(ii) * h[m]));
      return report(2, lhs, rhs);
    }
    case CCId::CC11: {
      const std::int64_t k = ranged(extra, "k", 0, pp - 1);
      Integer lhs = 0;
      Rational tail = 0;
      for (std::int64_t m = 0; m <= k; ++m) {
        lhs += binomial_exact(k + s * pp, m + ii * pp);
        if (m >= 1) {
          tail += 1 / (Rational(m) * two_power(m));
        }
      }
      const Rational rhs = two_power(k) * Rational(choose_ij) * (1 + prime * Rational(s) * tail);
      return report(2, Rational(lhs), rhs);
    }
  }
  throw UnknownId("unhandled CC lemma");
}

std::vector<Params> cc_parameter_grid(CCId id, std::uint32_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  std::vector<Params> grid;
  switch (id) {
    case CCId::CC22:
      for (std::int64_t r = 1; r < pp; ++r) {
        grid.push_back(Params{{"r", r}});
      }
      break;
    case CCId::CC2:
      grid.emplace_back();
      break;
    case CCId::CC1: {
      const auto spread = index_spread(p);
      for (const std::int64_t k : spread) {
        for (const std::int64_t m : spread) {
          if (m <= k) {
            grid.push_back(Params{{"k", k}, {"m", m}});
          }
        }
      }
      break;
    }
    case CCId::CC11:
      for (std::int64_t k = 0; k < pp; ++k) {
        grid.push_back(Params{{"k", k}});
      }
      break;
  }
  return grid;
}

}  // namespace supercong
