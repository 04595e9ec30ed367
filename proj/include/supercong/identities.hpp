#pragma once

#include <span>
#include <string_view>

#include "supercong/report.hpp"

namespace supercong {

// Exact identities, each evaluated on both sides in rational arithmetic.
//   H1           sum_k binom(n,k) H_k = 2^n (H_n - sum_{k<=n} 1/(k 2^k))
//   H2           sum_k binom(n,k)^2 H_k = binom(2n,n) (2H_n - H_{2n})
//   T1, T2       sum_k T(n,k) = 1,  sum_k T(n,k) H_k = 2H_n
//   T4           sum_k T(n,k) H_{2k} = 3H_n - H_{floor(n/2)}
//   T4A          sum_{k<n} F(n,k) = -[n odd]
//   T4B          sum_{j<n} 1/(2j+1) sum_{k<=j} T(n,k) = H_{2n} - 5/2 H_n + H_{floor(n/2)}
//   INV_BINOM    sum_{m<k} 1/binom(k-1,m) = k/2^k sum_{j<=k} 2^j/j
//   DOUBLE_BINOM sum_{l=1}^{p-1} binom(p-1,l) sum_{r=1}^{l} binom(p,r) = 2^{p-1}(2^{p-1}-1), p odd prime
//   HOCKEY       sum_{m<N} binom(M+m,m) = N binom(M+N,M)/(M+1)
//   VANDERMONDE  sum_c binom(b,c)^2 = binom(2b,b)
enum class IdentityId { H1, H2, T1, T2, T4, T4A, T4B, INV_BINOM, DOUBLE_BINOM, HOCKEY, VANDERMONDE };

std::string_view to_string(IdentityId id);
/// Throws UnknownId.
IdentityId identity_from_string(std::string_view name);
std::span<const IdentityId> all_identities();

/// Parameters: n for H1..T4B, k for INV_BINOM, p for DOUBLE_BINOM, (M, N) for
/// HOCKEY, b for VANDERMONDE. Throws MissingParam / ParamOutOfRange.
CheckReport check_identity(IdentityId id, const Params& params);

/// Evaluates both DOUBLE_BINOM sides at an arbitrary n >= 1 and reports the
/// outcome with status info.
CheckReport explore_double_binom(std::uint32_t n);

}  // namespace supercong
