#include <gtest/gtest.h>

#include "supercong/errors.hpp"
#include "supercong/identities.hpp"
#include "supercong/wz.hpp"

using namespace supercong;

TEST(Identities, Examples) {
  const CheckReport t1 = check_identity(IdentityId::T1, Params{{"n", 0}});
  EXPECT_TRUE(t1.passed());
  EXPECT_EQ(t1.lhs, "1");
  EXPECT_EQ(t1.rhs, "1");

  const CheckReport h1 = check_identity(IdentityId::H1, Params{{"n", 1}});
  EXPECT_TRUE(h1.passed());
  EXPECT_EQ(h1.lhs, "1");

  const CheckReport hockey = check_identity(IdentityId::HOCKEY, Params{{"M", 2}, {"N", 3}});
  EXPECT_TRUE(hockey.passed());
  EXPECT_EQ(hockey.lhs, "10");
  EXPECT_EQ(hockey.rhs, "10");

  const CheckReport t4a = check_identity(IdentityId::T4A, Params{{"n", 2}});
  EXPECT_TRUE(t4a.passed());
  EXPECT_EQ(t4a.lhs, "0");
}

TEST(Identities, ExactReportsCarryNoModulus) {
  const CheckReport report = check_identity(IdentityId::H2, Params{{"n", 5}});
  EXPECT_FALSE(report.modulus.has_value());
  EXPECT_EQ(report.suite, "identities");
  EXPECT_EQ(report.check_id, "H2");
}

TEST(Identities, Errors) {
  EXPECT_THROW(check_identity(IdentityId::H1, Params{}), MissingParam);
  EXPECT_THROW(check_identity(IdentityId::HOCKEY, Params{{"M", 1}}), MissingParam);
  EXPECT_THROW(identity_from_string("T3"), UnknownId);
  EXPECT_THROW(check_identity(IdentityId::DOUBLE_BINOM, Params{{"p", 9}}), ParamOutOfRange);
  EXPECT_EQ(identity_from_string("INV_BINOM"), IdentityId::INV_BINOM);
}

TEST(Identities, EverySizeUpTo60) {
  for (const IdentityId id : all_identities()) {
    if (id == IdentityId::DOUBLE_BINOM || id == IdentityId::HOCKEY) continue;
    const std::string key = id == IdentityId::INV_BINOM ? "k" : id == IdentityId::VANDERMONDE ? "b" : "n";
    for (std::int64_t n = 0; n <= 60; ++n) {
      const CheckReport report = check_identity(id, Params{{key, n}});
      ASSERT_TRUE(report.passed()) << to_string(id) << " " << key << "=" << n << ": " << report.lhs << " vs "
                                   << report.rhs;
    }
  }
}

TEST(Identities, HockeyGrid) {
  for (std::int64_t m = 0; m <= 30; ++m) {
    for (std::int64_t n = 0; n <= 30; ++n) {
      ASSERT_TRUE(check_identity(IdentityId::HOCKEY, Params{{"M", m}, {"N", n}}).passed()) << m << "," << n;
    }
  }
}

TEST(Identities, DoubleBinomAtPrimes) {
  for (const std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const CheckReport report = check_identity(IdentityId::DOUBLE_BINOM, Params{{"p", p}});
    EXPECT_TRUE(report.passed()) << p;
    EXPECT_EQ(report.prime, static_cast<std::uint64_t>(p));
  }
}

TEST(Identities, DoubleBinomExplorationIsInformational) {
  const CheckReport report = explore_double_binom(4);
  EXPECT_EQ(report.status, Status::info);
  EXPECT_EQ(report.check_id, "DOUBLE_BINOM_EXPLORE");
  EXPECT_THROW(explore_double_binom(0), ParamOutOfRange);
}

TEST(WZ, InitialValues) {
  EXPECT_EQ(wz_f(1, 0), -1);
  EXPECT_EQ(wz_f(2, 0) + wz_f(2, 1), 0);
  EXPECT_EQ(wz_w(5, 0), 0);
  EXPECT_EQ(wz_g(5, 0), 0);
}

TEST(WZ, TGInstanceAtThreeOne) {
  // T(3,1) - T(2,1) = G(2,2) - G(2,1), every term by hand
  EXPECT_EQ(wz_t(3, 1), 12);
  EXPECT_EQ(wz_t(2, 1), -6);
  EXPECT_EQ(wz_g(2, 2), 16);
  EXPECT_EQ(wz_g(2, 1), -2);
  EXPECT_EQ(wz_t(3, 1) - wz_t(2, 1), wz_g(2, 2) - wz_g(2, 1));
}

TEST(WZ, BothPairsHold) {
  for (const WZPairId id : {WZPairId::FW, WZPairId::TG}) {
    const CheckReport report = verify_wz(id, 60);
    EXPECT_TRUE(report.passed()) << to_string(id) << ": " << report.note;
    EXPECT_EQ(report.lhs, report.rhs);
  }
}

TEST(WZ, ParityCorollary) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    Rational sum = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      sum += wz_f(n, k);
    }
    EXPECT_EQ(sum, n % 2 == 1 ? -1 : 0) << n;
  }
}

TEST(WZ, RejectsTinyRange) {
  EXPECT_THROW(verify_wz(WZPairId::FW, 1), ParamOutOfRange);
  EXPECT_THROW(wz_pair_from_string("XY"), UnknownId);
}
