#include "supercong/wz.hpp"

#include <sstream>

#include "supercong/combinat.hpp"

namespace supercong {

namespace {

Integer signed_by_parity(Integer value, std::int64_t exponent) {
  return exponent % 2 == 0 ? value : Integer(-value);
}

// Counts instances and remembers the first one that does not hold.
class InstanceTally {
 public:
  void record(bool holds, const std::string& where, const Rational& lhs, const Rational& rhs) {
    ++total_;
    if (holds) {
      ++held_;
    } else if (first_failure_.empty()) {
      std::ostringstream out;
      out << where << ": " << to_string(lhs) << " != " << to_string(rhs);
      first_failure_ = out.str();
    }
  }

  void expect_equal(const std::string& where, const Rational& lhs, const Rational& rhs) {
    record(lhs == rhs, where, lhs, rhs);
  }

  CheckReport finish(WZPairId id, std::uint32_t n_max) const {
    CheckReport report;
    report.suite = "wz";
    report.check_id = std::string(to_string(id));
    report.params.set("n_max", n_max);
    report.lhs = std::to_string(held_);
    report.rhs = std::to_string(total_);
    report.status = held_ == total_ ? Status::pass : Status::fail;
    report.note = first_failure_;
    return report;
  }

 private:
  std::uint64_t total_ = 0;
  std::uint64_t held_ = 0;
  std::string first_failure_;
};

std::string at(std::string_view what, std::int64_t n, std::int64_t k) {
  std::ostringstream out;
  out << what << " n=" << n << " k=" << k;
  return out.str();
}

CheckReport verify_fw(std::uint32_t n_max) {
  InstanceTally tally;
  const auto top = static_cast<std::int64_t>(n_max);
  for (std::int64_t n = 1; n <= top; ++n) {
    Rational shifted_sum = 0;
    Rational base_sum = 0;
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      const Rational lhs = wz_f(n + 2, k) - wz_f(n, k);
      const Rational rhs = Rational(wz_w(n, k + 1) - wz_w(n, k));
      tally.expect_equal(at("F(n+2,k)-F(n,k)=W(n,k+1)-W(n,k)", n, k), lhs, rhs);
      shifted_sum += wz_f(n + 2, k);
    }
    for (std::int64_t k = 0; k <= n - 1; ++k) {
      base_sum += wz_f(n, k);
    }
    tally.expect_equal(at("telescoped sum", n, n + 1), shifted_sum, base_sum);
    // parity corollary: sum_{k<n} F(n,k) = -[n odd]
    tally.expect_equal(at("parity", n, n - 1), base_sum, Rational(n % 2 == 1 ? -1 : 0));
    tally.expect_equal(at("W(n,0)=0", n, 0), Rational(wz_w(n, 0)), Rational(0));
  }
  if (n_max >= 2) {
    tally.expect_equal("initial n=1", wz_f(1, 0), Rational(-1));
    tally.expect_equal("initial n=2", wz_f(2, 0) + wz_f(2, 1), Rational(0));
  }
  return tally.finish(WZPairId::FW, n_max);
}

CheckReport verify_tg(std::uint32_t n_max) {
  InstanceTally tally;
  const auto top = static_cast<std::int64_t>(n_max);
  for (std::int64_t n = 1; n <= top; ++n) {
    Integer prefix_n = 0;
    Integer prefix_prev = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      const Integer lhs = wz_t(n, k) - wz_t(n - 1, k);
      const Integer rhs = wz_g(n - 1, k + 1) - wz_g(n - 1, k);
      tally.expect_equal(at("T(n,k)-T(n-1,k)=G(n-1,k+1)-G(n-1,k)", n, k), Rational(lhs),
                         Rational(rhs));
      prefix_n += wz_t(n, k);
      prefix_prev += wz_t(n - 1, k);
      if (k < n) {
        tally.expect_equal(at("partial sum j=k", n, k), Rational(prefix_n),
                           Rational(prefix_prev + wz_g(n - 1, k + 1)));
      }
    }
    tally.expect_equal(at("G(n,0)=0", n, 0), Rational(wz_g(n, 0)), Rational(0));
  }
  return tally.finish(WZPairId::TG, n_max);
}

}  // namespace

std::string_view to_string(WZPairId id) { return id == WZPairId::FW ? "FW" : "TG"; }

WZPairId wz_pair_from_string(std::string_view name) {
  if (name == "FW") {
    return WZPairId::FW;
  }
  if (name == "TG") {
    return WZPairId::TG;
  }
  throw UnknownId("unknown WZ pair '" + std::string(name) + "'");
}

Rational wz_f(std::int64_t n, std::int64_t k) {
  if (n <= 0 || k < 0) {
    return 0;
  }
  const Integer numerator =
      signed_by_parity(binomial_exact(n - 1, k) * binomial_exact(n + k, k) * Integer(static_cast<long>(n)),
                       n - k);
  return make_rational(numerator, Integer(static_cast<long>(2 * k + 1)));
}

Integer wz_w(std::int64_t n, std::int64_t k) {
  return signed_by_parity(2 * binomial_exact(n, k - 1) * binomial_exact(n + k, k - 1), n - k - 1);
}

Integer wz_t(std::int64_t n, std::int64_t k) { return legendre_coefficient(n, k); }

Integer wz_g(std::int64_t n, std::int64_t k) {
  return signed_by_parity(2 * binomial_exact(n, k - 1) * binomial_exact(n + k, k - 1), n - k);
}

CheckReport verify_wz(WZPairId id, std::uint32_t n_max) {
  if (n_max < 2) {
    throw ParamOutOfRange("verify_wz needs n_max >= 2");
  }
  return id == WZPairId::FW ? verify_fw(n_max) : verify_tg(n_max);
}

}  // namespace supercong
