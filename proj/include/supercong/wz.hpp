#pragma once

#include <cstdint>
#include <string_view>

#include "supercong/arith.hpp"
#include "supercong/report.hpp"

namespace supercong {

// Wilf-Zeilberger pairs behind the weighted sum of T(n,k) H_{2k}:
//   FW: F(n,k) = (-1)^{n-k}/(2k+1) binom(n-1,k) binom(n+k,k) n,
//       W(n,k) = 2 (-1)^{n-k-1} binom(n,k-1) binom(n+k,k-1),
//       F(n+2,k) - F(n,k) = W(n,k+1) - W(n,k).
//   TG: T(n,k) = (-1)^{n-k} binom(n,k) binom(n+k,k),
//       G(n,k) = 2 (-1)^{n-k} binom(n,k-1) binom(n+k,k-1),
//       T(n,k) - T(n-1,k) = G(n-1,k+1) - G(n-1,k).
// Binomials with a negative lower index vanish, so W(n,0) = G(n,0) = 0.

enum class WZPairId { FW, TG };

std::string_view to_string(WZPairId id);
WZPairId wz_pair_from_string(std::string_view name);

Rational wz_f(std::int64_t n, std::int64_t k);
Integer wz_w(std::int64_t n, std::int64_t k);
Integer wz_t(std::int64_t n, std::int64_t k);
Integer wz_g(std::int64_t n, std::int64_t k);

/// Checks every recurrence instance for n <= n_max exactly. The report's
/// lhs/rhs are the number of instances that hold and the number checked;
/// the first failing instance goes into the note.
CheckReport verify_wz(WZPairId id, std::uint32_t n_max);

}  // namespace supercong
