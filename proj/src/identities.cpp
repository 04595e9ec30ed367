#include "supercong/identities.hpp"

#include <array>
#include <string>

#include "supercong/combinat.hpp"
#include "supercong/harmonic.hpp"
#include "supercong/wz.hpp"

namespace supercong {

namespace {

constexpr std::array kIdentities = {
    IdentityId::H1,  IdentityId::H2,        IdentityId::T1,           IdentityId::T2,
    IdentityId::T4,  IdentityId::T4A,       IdentityId::T4B,          IdentityId::INV_BINOM,
    IdentityId::DOUBLE_BINOM, IdentityId::HOCKEY, IdentityId::VANDERMONDE};

constexpr std::array<std::string_view, kIdentities.size()> kNames = {
    "H1", "H2", "T1", "T2", "T4", "T4A", "T4B", "INV_BINOM", "DOUBLE_BINOM", "HOCKEY", "VANDERMONDE"};

std::int64_t natural_param(const Params& params, const std::string& key) {
  const std::int64_t value = params.get(key);
  if (value < 0) {
    throw ParamOutOfRange(key + " must be non-negative");
  }
  return value;
}

Rational power_of_two(std::int64_t e) {
  Integer value;
  mpz_ui_pow_ui(value.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rational(value);
}

Rational over(const Integer& num, std::int64_t den) { return make_rational(num, Integer(static_cast<long>(den))); }

struct Sides {
  Rational lhs;
  Rational rhs;
};

Sides eval_h1(std::int64_t n) {
  const auto h = harmonic_numbers(static_cast<std::uint64_t>(n));
  Sides s{0, 0};
  Rational tail = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    s.lhs += Rational(binomial_exact(n, k)) * h[k];
    if (k >= 1) {
      tail += 1 / (Rational(k) * power_of_two(k));
    }
  }
  s.rhs = power_of_two(n) * (h[n] - tail);
  return s;
}

Sides eval_h2(std::int64_t n) {
  const auto h = harmonic_numbers(static_cast<std::uint64_t>(2 * n));
  Sides s{0, 0};
  for (std::int64_t k = 0; k <= n; ++k) {
    const Integer b = binomial_exact(n, k);
    s.lhs += Rational(b * b) * h[k];
  }
  s.rhs = Rational(binomial_exact(2 * n, n)) * (2 * h[n] - h[2 * n]);
  return s;
}

// Shared by T1, T2 and T4: sum_k T(n,k) * weight(k).
template <typename Weight>
Rational legendre_weighted_sum(std::int64_t n, Weight weight) {
  Rational sum = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    sum += Rational(legendre_coefficient(n, k)) * weight(k);
  }
  return sum;
}

Sides eval_t4b(std::int64_t n) {
  const auto h = harmonic_numbers(static_cast<std::uint64_t>(2 * n));
  Sides s{0, 0};
  Integer prefix = 0;
  for (std::int64_t j = 0; j <= n - 1; ++j) {
    prefix += legendre_coefficient(n, j);
    s.lhs += over(prefix, 2 * j + 1);
  }
  s.rhs = h[2 * n] - Rational(5, 2) * h[n] + h[n / 2];
  return s;
}

Sides eval_inv_binom(std::int64_t k) {
  Sides s{0, 0};
  for (std::int64_t m = 0; m <= k - 1; ++m) {
    s.lhs += 1 / Rational(binomial_exact(k - 1, m));
  }
  Rational inner = 0;
  for (std::int64_t j = 1; j <= k; ++j) {
    inner += power_of_two(j) / Rational(j);
  }
  s.rhs = Rational(k) / power_of_two(k) * inner;
  return s;
}

Sides eval_double_binom(std::int64_t n) {
  Sides s{0, 0};
  Integer inner = 0;
  Integer lhs = 0;
  for (std::int64_t l = 1; l <= n - 1; ++l) {
    inner += binomial_exact(n, l);  // sum_{r=1}^{l} binom(n, r)
    lhs += binomial_exact(n - 1, l) * inner;
  }
  s.lhs = Rational(lhs);
  const Rational two_pow = power_of_two(n - 1);
  s.rhs = two_pow * (two_pow - 1);
  return s;
}

Sides eval_hockey(std::int64_t big_m, std::int64_t big_n) {
  Integer term = 1;  // binom(M+m, m) at m = 0
  Integer lhs = 0;
  for (std::int64_t m = 0; m <= big_n - 1; ++m) {
    lhs += term;
    term *= static_cast<unsigned long>(big_m + m + 1);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(m + 1));
  }
  return {Rational(lhs), over(big_n * binomial_exact(big_m + big_n, big_m), big_m + 1)};
}

Sides eval_vandermonde(std::int64_t b) {
  Integer lhs = 0;
  for (std::int64_t c = 0; c <= b; ++c) {
    const Integer term = binomial_exact(b, c);
    lhs += term * term;
  }
  return {Rational(lhs), Rational(binomial_exact(2 * b, b))};
}

Sides evaluate(IdentityId id, const Params& params) {
  switch (id) {
    case IdentityId::H1:
      return eval_h1(natural_param(params, "n"));
    case IdentityId::H2:
      return eval_h2(natural_param(params, "n"));
    case IdentityId::T1: {
      const std::int64_t n = natural_param(params, "n");
      return {legendre_weighted_sum(n, [](std::int64_t) { return Rational(1); }), Rational(1)};
    }
    case IdentityId::T2: {
      const std::int64_t n = natural_param(params, "n");
      const auto h = harmonic_numbers(static_cast<std::uint64_t>(n));
      return {legendre_weighted_sum(n, [&](std::int64_t k) { return h[k]; }), 2 * h[n]};
    }
    case IdentityId::T4: {
      const std::int64_t n = natural_param(params, "n");
      const auto h = harmonic_numbers(static_cast<std::uint64_t>(2 * n));
      return {legendre_weighted_sum(n, [&](std::int64_t k) { return h[2 * k]; }), 3 * h[n] - h[n / 2]};
    }
    case IdentityId::T4A: {
      const std::int64_t n = natural_param(params, "n");
      Rational lhs = 0;
      for (std::int64_t k = 0; k <= n - 1; ++k) {
        lhs += wz_f(n, k);
      }
      return {lhs, Rational(n % 2 == 1 ? -1 : 0)};
    }
    case IdentityId::T4B:
      return eval_t4b(natural_param(params, "n"));
    case IdentityId::INV_BINOM:
      return eval_inv_binom(natural_param(params, "k"));
    case IdentityId::DOUBLE_BINOM: {
      const std::int64_t p = params.get("p");
      if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw ParamOutOfRange("DOUBLE_BINOM is asserted only at odd primes");
      }
      return eval_double_binom(p);
    }
    case IdentityId::HOCKEY:
      return eval_hockey(natural_param(params, "M"), natural_param(params, "N"));
    case IdentityId::VANDERMONDE:
      return eval_vandermonde(natural_param(params, "b"));
  }
  throw UnknownId("unhandled identity");
}

}  // namespace

std::string_view to_string(IdentityId id) { return kNames[static_cast<std::size_t>(id)]; }

IdentityId identity_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) {
      return kIdentities[i];
    }
  }
  throw UnknownId("unknown identity '" + std::string(name) + "'");
}

std::span<const IdentityId> all_identities() { return kIdentities; }

CheckReport check_identity(IdentityId id, const Params& params) {
  const Sides sides = evaluate(id, params);
  const std::uint64_t prime = id == IdentityId::DOUBLE_BINOM ? static_cast<std::uint64_t>(params.get("p")) : 0;
  return exact_report("identities", std::string(to_string(id)), prime, params, sides.lhs, sides.rhs);
}

CheckReport explore_double_binom(std::uint32_t n) {
  if (n < 1) {
    throw ParamOutOfRange("DOUBLE_BINOM exploration needs n >= 1");
  }
  const Sides sides = eval_double_binom(n);
  CheckReport report =
      exact_report("identities", "DOUBLE_BINOM_EXPLORE", 0, Params{{"n", n}}, sides.lhs, sides.rhs);
  report.note = sides.lhs == sides.rhs ? "equal" : "not equal";
  report.status = Status::info;
  return report;
}

}  // namespace supercong
