#include "supercong/report.hpp"

#include <algorithm>

namespace supercong {

Params& Params::set(const std::string& key, std::int64_t value) {
  for (auto& entry : entries_) {
    if (entry.first == key) {
      entry.second = value;
      return *this;
    }
  }
  entries_.emplace_back(key, value);
  return *this;
}

bool Params::has(const std::string& key) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& entry) { return entry.first == key; });
}

std::int64_t Params::get(const std::string& key) const {
  for (const auto& entry : entries_) {
    if (entry.first == key) {
      return entry.second;
    }
  }
  throw MissingParam("missing parameter '" + key + "'");
}

std::int64_t Params::get_or(const std::string& key, std::int64_t fallback) const {
  return has(key) ? get(key) : fallback;
}

std::string Params::flat() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += key;
    out += '=';
    out += std::to_string(value);
    out += ';';
  }
  return out;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::info:
      return "info";
  }
  return "fail";
}

CheckReport congruence_report(std::string suite, std::string check_id, std::uint64_t prime,
                              Params params, const Residue& lhs, const Residue& rhs) {
  if (!(lhs.modulus() == rhs.modulus())) {
    throw ModulusMismatch("report sides use different moduli");
  }
  CheckReport report;
  report.suite = std::move(suite);
  report.check_id = std::move(check_id);
  report.prime = prime;
  report.params = std::move(params);
  report.modulus = lhs.modulus();
  report.lhs = to_string(lhs);
  report.rhs = to_string(rhs);
  report.status = lhs == rhs ? Status::pass : Status::fail;
  return report;
}

CheckReport exact_report(std::string suite, std::string check_id, std::uint64_t prime, Params params,
                         const Rational& lhs, const Rational& rhs) {
  CheckReport report;
  report.suite = std::move(suite);
  report.check_id = std::move(check_id);
  report.prime = prime;
  report.params = std::move(params);
  report.lhs = to_string(lhs);
  report.rhs = to_string(rhs);
  report.status = lhs == rhs ? Status::pass : Status::fail;
  return report;
}

void require_odd_prime(std::uint32_t p, std::uint32_t min_prime) {
  if (!is_prime(p)) {
    throw ParamOutOfRange(std::to_string(p) + " is not prime");
  }
  if (p < std::max<std::uint32_t>(3, min_prime)) {
    throw PrimeTooSmall("p = " + std::to_string(p) + " is below the minimum prime " +
                        std::to_string(std::max<std::uint32_t>(3, min_prime)));
  }
}

}  // namespace supercong
