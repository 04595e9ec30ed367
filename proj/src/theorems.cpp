#include "supercong/theorems.hpp"

#include <array>
#include <numeric>
#include <string>

#include "supercong/combinat.hpp"
#include "supercong/harmonic.hpp"

namespace supercong {

namespace {

using u128 = unsigned __int128;

// Visits every lattice point 0 <= m_i < bounds[i] (and, when total_cap is
// set, m_1 + ... + m_n < total_cap) with its exact multinomial coefficient.
// Moving one step along a coordinate multiplies by (sum m)+1 and divides by
// m_i + 1, so each point costs O(1) big-integer work.
class LatticeWalk {
 public:
  LatticeWalk(std::vector<std::uint64_t> bounds, std::optional<std::uint64_t> total_cap)
      : bounds_(std::move(bounds)), cap_(total_cap), coords_(bounds_.size(), 0), values_(bounds_.size() + 1) {
    if (bounds_.empty()) {
      throw ParamOutOfRange("lattice walk needs at least one dimension");
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    values_[0] = 1;
    descend(0, 0, visit);
  }

  std::span<const std::uint64_t> coords() const { return coords_; }

 private:
  template <typename Visit>
  void descend(std::size_t depth, std::uint64_t total, Visit& visit) {
    std::uint64_t limit = bounds_[depth];
    if (cap_) {
      limit = std::min(limit, *cap_ - total);
    }
    Integer& current = values_[depth + 1];
    current = values_[depth];
    const bool last = depth + 1 == bounds_.size();
    for (std::uint64_t m = 0; m < limit; ++m) {
      coords_[depth] = m;
      if (last) {
        visit(current, total + m);
      } else {
        descend(depth + 1, total + m, visit);
      }
      current *= static_cast<unsigned long>(total + m + 1);
      mpz_divexact_ui(current.get_mpz_t(), current.get_mpz_t(), static_cast<unsigned long>(m + 1));
    }
    coords_[depth] = 0;
  }

  std::vector<std::uint64_t> bounds_;
  std::optional<std::uint64_t> cap_;
  std::vector<std::uint64_t> coords_;
  std::vector<Integer> values_;
};

std::vector<std::uint64_t> scaled_bounds(std::span<const std::uint32_t> radii, std::uint32_t p,
                                         std::uint64_t term_budget) {
  if (radii.empty()) {
    throw ParamOutOfRange("sum needs at least one radius");
  }
  std::vector<std::uint64_t> bounds;
  u128 terms = 1;
  for (const std::uint32_t r : radii) {
    if (r == 0) {
      throw ParamOutOfRange("radii must be positive");
    }
    const std::uint64_t bound = static_cast<std::uint64_t>(r) * p;
    bounds.push_back(bound);
    terms *= bound;
    if (terms > term_budget) {
      throw TermBudgetExceeded("box sum needs more than " + std::to_string(term_budget) + " terms");
    }
  }
  return bounds;
}

void check_simplex_budget(std::uint32_t dims, std::uint64_t cap, std::uint64_t term_budget) {
  // number of points with m_1 + ... + m_n < cap is binom(cap - 1 + n, n)
  const Integer points = binomial_exact(static_cast<std::int64_t>(cap - 1 + dims), dims);
  if (points > Integer(static_cast<unsigned long>(term_budget))) {
    throw TermBudgetExceeded("simplex sum needs more than " + std::to_string(term_budget) + " terms");
  }
}

Residue reduce_integral(const Rational& value, const Modulus& mod) {
  if (!is_p_integral(value, mod.p())) {
    throw PIntegralityViolation(to_string(value) + " is not " + std::to_string(mod.p()) + "-integral");
  }
  return make_residue(value, mod);
}

Residue squared_residue(const Integer& value, const Modulus& mod) {
  const Residue r = Residue::from_integer(value, mod);
  return r * r;
}

Integer pow_int(std::uint32_t base, std::uint32_t exponent) {
  Integer value;
  mpz_ui_pow_ui(value.get_mpz_t(), base, exponent);
  return value;
}

Params rst_params(std::uint32_t r, std::uint32_t s, std::uint32_t t) {
  return Params{{"r", r}, {"s", s}, {"t", t}};
}

constexpr std::array kSection5 = {Section5Id::NEWS1, Section5Id::NEWS2,  Section5Id::S1,     Section5Id::S2,
                                  Section5Id::CH1,   Section5Id::CH1_A0, Section5Id::NEWS2_2};
constexpr std::array<std::string_view, kSection5.size()> kSection5Names = {"NEWS1", "NEWS2",  "S1",     "S2",
                                                                          "CH1",   "CH1_A0", "NEWS2_2"};

constexpr std::array kSection6 = {Section6Id::PLAIN_DOUBLE, Section6Id::SUPER5,    Section6Id::KERNEL,
                                  Section6Id::PROP7,        Section6Id::CT_PIECE1, Section6Id::CT_PIECE2,
                                  Section6Id::CT_TOTAL};
constexpr std::array<std::string_view, kSection6.size()> kSection6Names = {
    "PLAIN_DOUBLE", "SUPER5", "KERNEL", "PROP7", "CT_PIECE1", "CT_PIECE2", "CT_TOTAL"};

template <typename Enum, std::size_t N>
Enum lookup(const std::array<std::string_view, N>& names, std::string_view name, std::string_view kind) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) {
      return static_cast<Enum>(i);
    }
  }
  throw UnknownId("unknown " + std::string(kind) + " '" + std::string(name) + "'");
}

std::uint32_t natural(const Params& params, const std::string& key, std::int64_t lo, std::int64_t hi) {
  const std::int64_t value = params.get(key);
  if (value < lo || value > hi) {
    throw ParamOutOfRange(key + " = " + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
  return static_cast<std::uint32_t>(value);
}

// sum over m_1 + m_2 + m_3 < p of multinomial^2 * weight(m, total)
template <typename Weight>
Residue truncated_triple(std::uint32_t p, const Modulus& mod, Weight weight) {
  LatticeWalk walk({p, p, p}, p);
  Residue sum = Residue::zero(mod);
  walk.run([&](const Integer& multinomial, std::uint64_t total) {
    sum += squared_residue(multinomial, mod) * weight(walk.coords(), total);
  });
  return sum;
}

CheckReport section5_report(Section5Id id, std::uint32_t p, Params params, const Residue& lhs, const Residue& rhs) {
  return congruence_report("section5", std::string(to_string(id)), p, std::move(params), lhs, rhs);
}

CheckReport check_ch1(Section5Id id, std::uint32_t p) {
  const std::int64_t half = (p - 1) / 2;
  const auto h = harmonic_numbers(static_cast<std::uint64_t>(2 * half));
  Rational sum = 0;
  for (std::int64_t a = id == Section5Id::CH1 ? 1 : 0; a <= half; ++a) {
    sum += Rational(legendre_coefficient(half, a)) * (2 * h[2 * a] - h[a] - h[half]);
  }
  const Modulus mod(p, 1);
  return section5_report(id, p, {}, make_residue(sum, mod), Residue::zero(mod));
}

}  // namespace

Residue multi_sum_lhs(const SumSpec& spec, std::uint64_t term_budget) {
  const Modulus mod(spec.p, spec.exponent);
  LatticeWalk walk(scaled_bounds(spec.radii, spec.p, term_budget), std::nullopt);
  const std::uint64_t m = mod.value();
  std::uint64_t sum = 0;
  walk.run([&](const Integer& multinomial, std::uint64_t) {
    std::uint64_t r = mpz_fdiv_ui(multinomial.get_mpz_t(), m);
    if (spec.squared) {
      r = static_cast<std::uint64_t>(static_cast<u128>(r) * r % m);
    }
    sum += r;
    if (sum >= m) {
      sum -= m;
    }
  });
  return Residue(sum, mod);
}

Integer multi_sum_lhs_exact(std::span<const std::uint32_t> radii, std::uint32_t p, bool squared,
                            std::uint64_t term_budget) {
  LatticeWalk walk(scaled_bounds(radii, p, term_budget), std::nullopt);
  Integer sum = 0;
  walk.run([&](const Integer& multinomial, std::uint64_t) { sum += squared ? Integer(multinomial * multinomial) : multinomial; });
  return sum;
}

Integer multi_sum_rhs(std::span<const std::uint32_t> radii, bool squared) {
  return multi_sum_lhs_exact(radii, 1, squared, ~std::uint64_t{0});
}

Residue theorem1_fast_lhs(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::uint32_t t,
                          std::uint32_t exponent) {
  if (r == 0 || s == 0 || t == 0) {
    throw ParamOutOfRange("radii must be positive");
  }
  const Modulus mod(p, exponent);
  const std::int64_t rp = static_cast<std::int64_t>(r) * p;
  const std::int64_t sp = static_cast<std::int64_t>(s) * p;
  const std::int64_t tp = static_cast<std::int64_t>(t) * p;
  // Summing the innermost coordinate by the hockey stick leaves
  //   t p * sum_{m1 < rp, m2 < sp} binom(m1+m2, m1) binom(m1+m2+tp, m1+m2) / (m1+m2+1);
  // grouping by k = m1 + m2 separates the rational weight from an inner
  // binomial sum over the admissible m1.
  const FactorialTable table(p, exponent, static_cast<std::uint64_t>(rp + sp));
  Residue sum = Residue::zero(mod);
  for (std::int64_t k = 0; k <= rp + sp - 2; ++k) {
    const Rational weight =
        Rational(tp) * Rational(binomial_exact(k + tp, k)) / Rational(k + 1);
    Residue inner = Residue::zero(mod);
    for (std::int64_t m = std::max<std::int64_t>(0, k - sp + 1); m <= std::min(k, rp - 1); ++m) {
      inner += binomial_mod(static_cast<std::uint64_t>(k), m, table);
    }
    sum += reduce_integral(weight, mod) * inner;
  }
  return sum;
}

CheckReport verify_theorem1(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::uint32_t t,
                            std::uint64_t term_budget) {
  require_odd_prime(p, 3);
  const std::array<std::uint32_t, 3> radii = {r, s, t};
  const Modulus mod(p, 3);
  const Residue oracle = multi_sum_lhs({{r, s, t}, p, false, 3}, term_budget);
  const Residue rhs = Residue::from_integer(multi_sum_rhs(radii, false), mod);
  const Residue fast = theorem1_fast_lhs(p, r, s, t, 3);
  CheckReport report = congruence_report("theorem1", "THEOREM1", p, rst_params(r, s, t), oracle, rhs);
  if (!(fast == oracle)) {
    report.status = Status::fail;
    report.note = "fast evaluator gave " + to_string(fast);
  }
  return report;
}

CheckReport verify_theoremTT(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::uint32_t t,
                             std::uint64_t term_budget) {
  require_odd_prime(p, 3);
  const std::array<std::uint32_t, 3> radii = {r, s, t};
  const Modulus mod(p, 2);
  const Residue lhs = multi_sum_lhs({{r, s, t}, p, true, 2}, term_budget);
  const Residue rhs = Residue::from_integer(multi_sum_rhs(radii, true), mod);
  return congruence_report("theoremTT", "THEOREM_TT", p, rst_params(r, s, t), lhs, rhs);
}

DecompositionTriple decomposition_components(std::uint32_t p, std::uint32_t i, std::uint32_t j, std::uint32_t t) {
  require_odd_prime(p, 3);
  if (t == 0) {
    throw ParamOutOfRange("t must be positive");
  }
  const std::int64_t pp = p;
  const std::int64_t n = static_cast<std::int64_t>(i) + j;
  const std::int64_t ip = static_cast<std::int64_t>(i) * pp;
  const std::int64_t tp = static_cast<std::int64_t>(t) * pp;
  const Rational scale(tp);

  DecompositionTriple out;
  out.i = i;
  out.j = j;
  out.t = t;

  // A: k runs over [m, p-1]; regroup by k so the rational weight is formed once.
  Rational a = 0;
  for (std::int64_t k = 0; k <= pp - 1; ++k) {
    Integer inner = 0;
    for (std::int64_t m = 0; m <= k; ++m) {
      inner += binomial_exact(k + n * pp, m + ip);
    }
    a += Rational(inner) * Rational(binomial_exact(k + (n + t) * pp, k + n * pp)) / Rational(k + n * pp + 1);
  }
  out.a = scale * a;

  Integer boundary = 0;
  for (std::int64_t m = 1; m <= pp - 1; ++m) {
    boundary += binomial_exact((n + 1) * pp, m + ip);
  }
  out.b = scale / Rational((n + 1) * pp + 1) * Rational(binomial_exact((n + t + 1) * pp, (n + 1) * pp)) *
          Rational(boundary);

  Rational c = 0;
  for (std::int64_t m = 0; m <= pp - 1; ++m) {
    for (std::int64_t k = 1; k <= m - 1; ++k) {
      c += Rational(binomial_exact(k + (n + 1) * pp, m + ip) *
                    binomial_exact(k + (n + t + 1) * pp, k + (n + 1) * pp)) /
           Rational(k + 1 + (n + 1) * pp);
    }
  }
  out.c = scale * c;

  for (const Rational* part : {&out.a, &out.b, &out.c}) {
    if (!is_p_integral(*part, p)) {
      throw PIntegralityViolation("decomposition component " + to_string(*part) + " is not " +
                                  std::to_string(p) + "-integral");
    }
  }
  return out;
}

CheckReport decomposition_check(std::uint32_t p, std::uint32_t i, std::uint32_t j, std::uint32_t t) {
  const DecompositionTriple parts = decomposition_components(p, i, j, t);
  const Modulus mod(p, 3);
  const std::int64_t n = static_cast<std::int64_t>(i) + j;
  const Rational target = Rational(t) * Rational(binomial_exact(n, i) * binomial_exact(n + t, n)) / Rational(n + 1);
  const Residue boundary_tail = make_residue(parts.b + parts.c, mod);
  CheckReport report = congruence_report("decomposition", "DECOMP", p, Params{{"i", i}, {"j", j}, {"t", t}},
                                         make_residue(parts.a, mod), reduce_integral(target, mod));
  report.note = "B+C=" + to_string(boundary_tail);
  if (!boundary_tail.is_zero()) {
    report.status = Status::fail;
  }
  return report;
}

CheckReport decomposition_total_check(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::uint32_t t,
                                      std::uint64_t term_budget) {
  require_odd_prime(p, 3);
  Rational total = 0;
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t j = 0; j < s; ++j) {
      const DecompositionTriple parts = decomposition_components(p, i, j, t);
      total += parts.a + parts.b + parts.c;
    }
  }
  const std::array<std::uint32_t, 3> radii = {r, s, t};
  const Integer exact = multi_sum_lhs_exact(radii, p, false, term_budget);
  return exact_report("decomposition", "DECOMP_TOTAL", p, rst_params(r, s, t), total, Rational(exact));
}

std::string_view to_string(Section5Id id) { return kSection5Names[static_cast<std::size_t>(id)]; }

Section5Id section5_from_string(std::string_view name) {
  return lookup<Section5Id>(kSection5Names, name, "section 5 step");
}

std::span<const Section5Id> all_section5() { return kSection5; }

CheckReport verify_section5_step(Section5Id id, std::uint32_t p, std::optional<std::uint32_t> b) {
  require_odd_prime(p, 3);
  const std::int64_t pp = p;
  const std::int64_t half = (pp - 1) / 2;

  switch (id) {
    case Section5Id::NEWS1: {
      const Modulus mod(p, 2);
      const Residue one = Residue::one(mod);
      const Residue lhs = truncated_triple(p, mod, [&](std::span<const std::uint64_t>, std::uint64_t) { return one; });
      return section5_report(id, p, {}, lhs, one);
    }
    case Section5Id::NEWS2: {
      const Modulus mod(p, 1);
      std::vector<Residue> h;
      for (const Rational& value : harmonic_numbers(p - 1)) {
        h.push_back(make_residue(value, mod));
      }
      const Residue lhs = truncated_triple(p, mod, [&](std::span<const std::uint64_t> m, std::uint64_t total) {
        return h[total] - h[m[0]];
      });
      return section5_report(id, p, {}, lhs, Residue::zero(mod));
    }
    case Section5Id::S1:
    case Section5Id::S2: {
      const Modulus mod(p, 2);
      Integer sum = 0;
      for (std::int64_t bb = 0; bb <= pp - 1; ++bb) {
        if ((id == Section5Id::S1) == (bb == half)) {
          continue;
        }
        Integer inner = 0;
        for (std::int64_t a = bb; a <= pp - 1; ++a) {
          const Integer c = binomial_exact(a, bb);
          inner += c * c;
        }
        // S1 weights by binom(2b, b); S2 by binom(p-1, p').
        sum += (id == Section5Id::S1 ? binomial_exact(2 * bb, bb) : binomial_exact(pp - 1, half)) * inner;
      }
      const Residue rhs = id == Section5Id::S1 ? Residue::zero(mod) : Residue::one(mod);
      return section5_report(id, p, {}, Residue::from_integer(sum, mod), rhs);
    }
    case Section5Id::CH1:
    case Section5Id::CH1_A0:
      return check_ch1(id, p);
    case Section5Id::NEWS2_2: {
      if (!b) {
        throw MissingParam("NEWS2_2 needs b");
      }
      const std::int64_t bb = *b;
      if (bb > half) {
        throw ParamOutOfRange("NEWS2_2 needs b <= (p-1)/2");
      }
      const auto h = harmonic_numbers(p - 1);
      Rational sum = 0;
      for (std::int64_t a = bb; a <= pp - 1; ++a) {
        const Integer c = binomial_exact(a, bb);
        sum += Rational(c * c) * (h[a] - h[a - bb]);
      }
      const Modulus mod(p, 1);
      return section5_report(id, p, Params{{"b", bb}}, make_residue(sum, mod), Residue::zero(mod));
    }
  }
  throw UnknownId("unhandled section 5 step");
}

std::string_view to_string(Section6Id id) { return kSection6Names[static_cast<std::size_t>(id)]; }

Section6Id section6_from_string(std::string_view name) {
  return lookup<Section6Id>(kSection6Names, name, "section 6 check");
}

std::span<const Section6Id> all_section6() { return kSection6; }

std::uint32_t min_prime(Section6Id id) { return id == Section6Id::PROP7 ? 5 : 3; }

CheckReport verify_section6(Section6Id id, std::uint32_t p, const Params& params, std::uint64_t term_budget) {
  require_odd_prime(p, min_prime(id));
  const std::int64_t pp = p;
  const Rational prime(pp);
  auto report = [&](Params record, const Residue& lhs, const Residue& rhs) {
    return congruence_report("section6", std::string(to_string(id)), p, std::move(record), lhs, rhs);
  };

  switch (id) {
    case Section6Id::PLAIN_DOUBLE: {
      const std::uint32_t r = natural(params, "r", 1, 1 << 16);
      const std::uint32_t s = natural(params, "s", 1, 1 << 16);
      const std::array<std::uint32_t, 2> radii = {r, s};
      const Modulus mod(p, 3);
      const Integer exact_lhs = multi_sum_lhs_exact(radii, p, false, term_budget);
      const Integer exact_rhs = multi_sum_rhs(radii, false);
      CheckReport out = report(Params{{"r", r}, {"s", s}}, multi_sum_lhs({{r, s}, p, false, 3}, term_budget),
                               Residue::from_integer(exact_rhs, mod));
      // both sides also have closed forms binom((r+s)p, rp) - 1 and binom(r+s, r) - 1
      const bool closed_lhs = exact_lhs == binomial_exact(static_cast<std::int64_t>(r + s) * pp, r * pp) - 1;
      const bool closed_rhs = exact_rhs == binomial_exact(r + s, r) - 1;
      if (!closed_lhs || !closed_rhs) {
        out.status = Status::fail;
        out.note = "closed form mismatch";
      }
      return out;
    }
    case Section6Id::SUPER5: {
      const std::uint32_t r = natural(params, "r", 1, 1 << 16);
      const std::uint32_t s = natural(params, "s", 1, 1 << 16);
      const std::array<std::uint32_t, 2> radii = {r, s};
      const Modulus mod(p, 2);
      const Residue rhs = Residue::from_int(legendre(Integer(static_cast<long>(p)), 3), mod) *
                          Residue::from_integer(multi_sum_rhs(radii, true), mod);
      return report(Params{{"r", r}, {"s", s}}, multi_sum_lhs({{r, s}, p, true, 2}, term_budget), rhs);
    }
    case Section6Id::KERNEL: {
      const Modulus mod(p, 2);
      LatticeWalk walk({p, p}, p);
      Residue lhs = Residue::zero(mod);
      walk.run([&](const Integer& binom, std::uint64_t) { lhs += squared_residue(binom, mod); });
      return report({}, lhs, Residue::from_int(legendre(Integer(static_cast<long>(p)), 3), mod));
    }
    case Section6Id::PROP7: {
      const std::uint32_t n = natural(params, "n", 1, 16);
      std::vector<std::uint32_t> radii;
      Params record{{"n", n}};
      for (std::uint32_t d = 1; d <= n; ++d) {
        const std::string key = "r" + std::to_string(d);
        radii.push_back(natural(params, key, 1, 1 << 16));
        record.set(key, radii.back());
      }
      const Modulus mod(p, 1);
      SumSpec spec{radii, p, false, 1};
      return report(record, multi_sum_lhs(spec, term_budget), Residue::from_integer(multi_sum_rhs(radii, false), mod));
    }
    case Section6Id::CT_PIECE1: {
      const Modulus mod(p, 2);
      Integer sum = 0;
      for (std::int64_t j = 0; j <= pp - 1; ++j) {
        const Integer c = binomial_exact(pp - 1, j);
        sum += c * c * c;
      }
      const Rational target = 1 + 3 * prime * Rational(fermat_quotient_exact(p));
      return report({}, Residue::from_integer(sum, mod), make_residue(target, mod));
    }
    case Section6Id::CT_PIECE2: {
      const Modulus mod(p, 2);
      Integer sum = 0;
      for (std::int64_t i = 0; i <= pp - 1; ++i) {
        for (std::int64_t j = 0; i + j < pp - 1; ++j) {
          sum += binomial_exact(pp - 1, i) * binomial_exact(pp - 1, j) * binomial_exact(pp, i + j + 1) *
                 binomial_exact(i + j, i);
        }
      }
      const Rational target = -3 * prime * Rational(fermat_quotient_exact(p));
      CheckReport out = report({}, Residue::from_integer(3 * sum, mod), make_residue(target, mod));
      Rational step = 0;
      for (std::int64_t k = 0; k <= pp - 2; ++k) {
        step += Rational(pow_int(2, static_cast<std::uint32_t>(k))) / Rational(k + 1);
      }
      step *= 3 * prime;
      const Residue step_residue = reduce_integral(step, mod);
      out.note = "3p*sum 2^k/(k+1)=" + to_string(step_residue);
      if (!(step_residue == make_residue(target, mod))) {
        out.status = Status::fail;
      }
      return out;
    }
    case Section6Id::CT_TOTAL: {
      const Modulus mod(p, 2);
      return report({}, multi_sum_lhs({{1, 1, 1}, p, false, 2}, term_budget), Residue::one(mod));
    }
  }
  throw UnknownId("unhandled section 6 check");
}

std::vector<Residue> explore_open_question(std::uint32_t p, std::uint32_t n, std::uint64_t term_budget) {
  require_odd_prime(p, 3);
  if (n < 2) {
    throw ParamOutOfRange("open question scan needs n >= 2");
  }
  check_simplex_budget(n, p, term_budget);
  const Modulus mod(p, 1);
  LatticeWalk walk(std::vector<std::uint64_t>(n, p), p);
  Residue truncated = Residue::zero(mod);
  walk.run([&](const Integer& multinomial, std::uint64_t) { truncated += squared_residue(multinomial, mod); });
  const Residue full = multi_sum_lhs({std::vector<std::uint32_t>(n, 1), p, true, 1}, term_budget);
  return {truncated, full};
}

CheckReport open_question_report(std::uint32_t p, std::uint32_t n, std::uint64_t term_budget) {
  const auto values = explore_open_question(p, n, term_budget);
  CheckReport report = congruence_report("open-question", "OPEN_QUESTION", p, Params{{"n", n}}, values[0], values[1]);
  report.status = Status::info;
  report.note = values[0] == values[1] ? "truncated and full sums agree mod p" : "truncated and full sums differ mod p";
  return report;
}

std::string_view to_string(AbelianId id) {
  switch (id) {
    case AbelianId::ORACLE:
      return "ORACLE";
    case AbelianId::CENTRAL:
      return "CENTRAL";
    case AbelianId::PARTIAL_SUM:
      return "PARTIAL_SUM";
  }
  return "ORACLE";
}

CheckReport verify_abelian(AbelianId id, const Params& params) {
  switch (id) {
    case AbelianId::ORACLE: {
      const std::uint32_t alphabet = natural(params, "alphabet", 1, 64);
      const std::uint32_t n = natural(params, "n", 0, 64);
      return exact_report("abelian", "ORACLE", 0, Params{{"alphabet", alphabet}, {"n", n}},
                          Rational(abelian_square_count(alphabet, n)), Rational(abelian_square_oracle(alphabet, n)));
    }
    case AbelianId::CENTRAL: {
      const std::uint32_t n = natural(params, "n", 0, 1 << 12);
      return exact_report("abelian", "CENTRAL", 0, Params{{"n", n}}, Rational(abelian_square_count(2, n)),
                          Rational(binomial_exact(2 * static_cast<std::int64_t>(n), n)));
    }
    case AbelianId::PARTIAL_SUM: {
      const std::uint32_t p = natural(params, "p", 3, 1 << 16);
      require_odd_prime(p, 3);
      const Modulus mod(p, 2);
      Integer sum = 0;
      for (std::uint32_t n = 1; n <= p - 1; ++n) {
        sum += abelian_square_count(3, n);
      }
      return congruence_report("abelian", "PARTIAL_SUM", p, {}, Residue::from_integer(sum, mod), Residue::zero(mod));
    }
  }
  throw UnknownId("unhandled abelian check");
}

}  // namespace supercong
