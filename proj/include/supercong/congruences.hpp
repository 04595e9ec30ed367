#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "supercong/harmonic.hpp"
#include "supercong/report.hpp"

namespace supercong {

// Classical congruences for multiple harmonic sums at n = p - 1, p > 3.
enum class HarmonicCongruenceId { C1, C2, C3, C4, C44, C66, C10, C55, C5, C6 };

/// signature at n = p-1 is congruent mod p^exponent to c0 + c1 q + c2 q^2,
/// where q = q_p(2) is the Fermat quotient of 2.
struct HarmonicCongruenceSpec {
  HarmonicCongruenceId id;
  HarmonicSignature signature;
  std::uint32_t exponent;
  std::array<Rational, 3> target;
  std::uint32_t min_prime;
};

std::string_view to_string(HarmonicCongruenceId id);
HarmonicCongruenceId harmonic_congruence_from_string(std::string_view name);
std::span<const HarmonicCongruenceSpec> harmonic_congruence_catalog();
const HarmonicCongruenceSpec& harmonic_congruence_spec(HarmonicCongruenceId id);

/// Evaluates the signature exactly and reduces it, cross-checks the direct
/// modular evaluator, and compares with the target. Throws PrimeTooSmall for p <= 3.
CheckReport check_harmonic_congruence(HarmonicCongruenceId id, std::uint32_t p);

enum class LemmaId {
  B1,
  B2,
  C7,
  BINOM_P_R,
  WOLSTENHOLME,
  LUCAS_STEP,
  K_PLUS_P,
  ZHS,
  HALF_HARMONIC,
  BINOM_PM1,
  BINOM_P_SIGN,
  POWER_SUM,
  MID_CENTRAL,
  CENTRAL_SUM
};

std::string_view to_string(LemmaId id);
LemmaId lemma_from_string(std::string_view name);
std::span<const LemmaId> all_lemmas();
std::uint32_t min_prime(LemmaId id);

/// Parameters by id:
///   BINOM_P_R, BINOM_P_SIGN: r (0 < r < p)      WOLSTENHOLME: a, b
///   LUCAS_STEP: n1, n0, k1, k0 (n0, k0 < p)     K_PLUS_P: k, m (k < m < p)
///   ZHS: a (a <= (p-1)/2)                       HALF_HARMONIC: part (1: H_{p'}, 2: H_{floor(p'/2)})
///   BINOM_PM1: j (j < p)                        POWER_SUM: i ((p-1) does not divide i)
///   MID_CENTRAL: c ((p-1)/2 < c <= p-1)         B1, B2, C7, CENTRAL_SUM: none
CheckReport check_lemma_congruence(LemmaId id, std::uint32_t p, const Params& params = {});

/// The parameter records a sweep visits for one prime. Quadratic grids are
/// thinned to a fixed spread of indices above p = 31.
std::vector<Params> lemma_parameter_grid(LemmaId id, std::uint32_t p);

// Binomials whose upper index is shifted by multiples of p.
enum class CCId { CC22, CC2, CC1, CC11 };

std::string_view to_string(CCId id);
CCId cc_from_string(std::string_view name);
std::span<const CCId> all_cc();

/// extra: CC22 needs r (0 < r < p); CC1 needs k, m (0 <= m <= k < p);
/// CC11 needs k (0 <= k < p); CC2 needs nothing.
CheckReport check_cc(CCId id, std::uint32_t p, std::uint32_t i, std::uint32_t j, const Params& extra = {});

std::vector<Params> cc_parameter_grid(CCId id, std::uint32_t p);

/// {0, 1, 2, 3, p'-1, p', p'+1, p-3, p-2, p-1} within [0, p-1] for p > 31, every index otherwise.
std::vector<std::int64_t> index_spread(std::uint32_t p);

}  // namespace supercong
