#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/report.hpp"

namespace supercong {

inline constexpr std::uint64_t kDefaultTermBudget = 100'000'000;

/// A box sum over 0 <= m_i <= radii[i] * p - 1 of multinomial(m)^e with
/// e = 2 when squared, reduced mod p^exponent.
struct SumSpec {
  std::vector<std::uint32_t> radii;
  std::uint32_t p = 3;
  bool squared = false;
  std::uint32_t exponent = 3;
};

/// Naive oracle: enumerates the whole box, updating the multinomial exactly
/// along the last coordinate. Throws TermBudgetExceeded above term_budget points.
Residue multi_sum_lhs(const SumSpec& spec, std::uint64_t term_budget = kDefaultTermBudget);

/// The same enumeration without reduction.
Integer multi_sum_lhs_exact(std::span<const std::uint32_t> radii, std::uint32_t p, bool squared,
                            std::uint64_t term_budget = kDefaultTermBudget);

/// Exact sum over 0 <= m_i <= radii[i] - 1.
Integer multi_sum_rhs(std::span<const std::uint32_t> radii, bool squared);

/// Triple box sum with radii (r, s, t) through the hockey-stick form
///   t p * sum_{m < rp} sum_{k=m}^{m+sp-1} binom(k, m) binom(k+tp, k) / (k+1),
/// O(rp * sp) terms instead of O(rst p^3).
Residue theorem1_fast_lhs(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::uint32_t t,
                          std::uint32_t exponent);

/// Triple sum over the (rp, sp, tp) box agrees mod p^3 with the (r, s, t) box,
/// and the fast evaluator matches the oracle.
CheckReport verify_theorem1(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::uint32_t t,
                            std::uint64_t term_budget = kDefaultTermBudget);

/// Squared triple sums agree mod p^2.
CheckReport verify_theoremTT(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::uint32_t t,
                             std::uint64_t term_budget = kDefaultTermBudget);

/// The three pieces of the (i, j) block of the triple sum after the
/// hockey-stick reduction: A (k < p), B (the k = p boundary), C (the tail).
struct DecompositionTriple {
  Rational a;
  Rational b;
  Rational c;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t t = 1;
};

/// Exact A_ij, B_ij, C_ij. Throws PIntegralityViolation if any has a
/// denominator divisible by p.
DecompositionTriple decomposition_components(std::uint32_t p, std::uint32_t i, std::uint32_t j, std::uint32_t t);

/// B + C = 0 and A = t/(i+j+1) binom(i+j, i) binom(i+j+t, i+j), both mod p^3.
CheckReport decomposition_check(std::uint32_t p, std::uint32_t i, std::uint32_t j, std::uint32_t t);

/// Sum of A + B + C over i < r, j < s equals the exact triple box sum.
CheckReport decomposition_total_check(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::uint32_t t,
                                      std::uint64_t term_budget = kDefaultTermBudget);

// Intermediate claims in the proof of the squared supercongruence.
// CH1 is checked with the lower limit a = 1 as displayed; CH1_A0 starts at
// a = 0, which is the sum the surrounding argument evaluates.
enum class Section5Id { NEWS1, NEWS2, S1, S2, CH1, CH1_A0, NEWS2_2 };

std::string_view to_string(Section5Id id);
Section5Id section5_from_string(std::string_view name);
std::span<const Section5Id> all_section5();

/// NEWS2_2 requires b with 0 <= b <= (p-1)/2.
CheckReport verify_section5_step(Section5Id id, std::uint32_t p, std::optional<std::uint32_t> b = std::nullopt);

enum class Section6Id { PLAIN_DOUBLE, SUPER5, KERNEL, PROP7, CT_PIECE1, CT_PIECE2, CT_TOTAL };

std::string_view to_string(Section6Id id);
Section6Id section6_from_string(std::string_view name);
std::span<const Section6Id> all_section6();
std::uint32_t min_prime(Section6Id id);

/// PLAIN_DOUBLE and SUPER5 need r, s; PROP7 needs n and r1..rn.
CheckReport verify_section6(Section6Id id, std::uint32_t p, const Params& params = {},
                            std::uint64_t term_budget = kDefaultTermBudget);

/// Residues mod p of the truncated squared sum (m_1 + ... + m_n < p) and of
/// the full p-box squared sum, for study. Asserts nothing.
std::vector<Residue> explore_open_question(std::uint32_t p, std::uint32_t n,
                                           std::uint64_t term_budget = kDefaultTermBudget);

CheckReport open_question_report(std::uint32_t p, std::uint32_t n, std::uint64_t term_budget = kDefaultTermBudget);

// Abelian squares: enumeration oracle vs composition formula, f_2(n) against
// the central binomial, and sum_{n=1}^{p-1} f_3(n) = 0 mod p^2.
enum class AbelianId { ORACLE, CENTRAL, PARTIAL_SUM };

std::string_view to_string(AbelianId id);
/// ORACLE needs alphabet, n; CENTRAL needs n; PARTIAL_SUM needs p.
CheckReport verify_abelian(AbelianId id, const Params& params);

}  // namespace supercong
