#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

/// Ordered key/value parameter record of a single check.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<std::string, std::int64_t>> entries) : entries_(entries) {}

  Params& set(const std::string& key, std::int64_t value);
  bool has(const std::string& key) const;
  /// Throws MissingParam.
  std::int64_t get(const std::string& key) const;
  std::int64_t get_or(const std::string& key, std::int64_t fallback) const;

  const std::vector<std::pair<std::string, std::int64_t>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// "key=value;" pairs in insertion order.
  std::string flat() const;

  friend bool operator==(const Params&, const Params&) = default;
  friend auto operator<=>(const Params&, const Params&) = default;

 private:
  std::vector<std::pair<std::string, std::int64_t>> entries_;
};

enum class Status { pass, fail, info };

std::string_view to_string(Status status);

/// Outcome of one verification. For congruences lhs/rhs are residue values
/// mod p^k; for exact identities they are fractions and modulus is empty.
struct CheckReport {
  std::string suite;
  std::string check_id;
  std::uint64_t prime = 0;  // 0 when the check has no prime
  Params params;
  std::optional<Modulus> modulus;
  std::string lhs;
  std::string rhs;
  Status status = Status::fail;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::string note;

  bool passed() const { return status == Status::pass; }
};

CheckReport congruence_report(std::string suite, std::string check_id, std::uint64_t prime,
                              Params params, const Residue& lhs, const Residue& rhs);

CheckReport exact_report(std::string suite, std::string check_id, std::uint64_t prime, Params params,
                         const Rational& lhs, const Rational& rhs);

/// Requires 3 <= p (odd prime) and p >= min_prime. Throws PrimeTooSmall / ParamOutOfRange.
void require_odd_prime(std::uint32_t p, std::uint32_t min_prime);

}  // namespace supercong
