#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "supercong/combinat.hpp"
#include "supercong/errors.hpp"
#include "supercong/theorems.hpp"

using namespace supercong;

namespace {

// Box sum by nested loops and factorial-quotient multinomials, sharing no
// code with the incremental walk.
Integer box_oracle(const std::vector<std::uint32_t>& bounds, bool squared) {
  Integer total = 0;
  std::vector<std::uint64_t> m(bounds.size());
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == bounds.size()) {
      const Integer c = multinomial_exact(m);
      total += squared ? Integer(c * c) : c;
      return;
    }
    for (std::uint64_t v = 0; v < bounds[i]; ++v) {
      m[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return total;
}

std::vector<std::uint32_t> scaled(std::vector<std::uint32_t> radii, std::uint32_t p) {
  for (auto& r : radii) r *= p;
  return radii;
}

}  // namespace

TEST(MultiSum, LhsExamples) {
  EXPECT_EQ(multi_sum_lhs({{1, 1, 1}, 3, false, 3}).value(), 1u);
  EXPECT_EQ(multi_sum_lhs({{1, 1}, 5, false, 3}).value(), 1u);
  EXPECT_EQ(multi_sum_lhs({{1}, 3, false, 1}).value(), 0u);
  EXPECT_EQ(multi_sum_lhs({{1}, 3, true, 1}).value(), 0u);
}

TEST(MultiSum, RhsExamples) {
  const std::vector<std::uint32_t> a = {1, 1, 1}, b = {2, 1, 1}, c = {2, 2, 1};
  EXPECT_EQ(multi_sum_rhs(a, false), 1);
  EXPECT_EQ(multi_sum_rhs(b, false), 2);
  EXPECT_EQ(multi_sum_rhs(c, true), 7);
}

TEST(MultiSum, ClosedFormOfDoubleBox) {
  // binom(10,5) - 1 = 251
  const std::vector<std::uint32_t> radii = {1, 1};
  EXPECT_EQ(multi_sum_lhs_exact(radii, 5, false), 251);
}

TEST(MultiSum, WalkMatchesNestedOracle) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::uint32_t> dims(1, 4);
  std::uniform_int_distribution<std::uint32_t> radius(1, 2);
  const std::vector<std::uint32_t> primes = {3, 5};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::uint32_t> radii(dims(rng));
    for (auto& r : radii) r = radius(rng);
    const std::uint32_t p = primes[trial % 2];
    if (radii.size() == 4 && p == 5) continue;
    const bool squared = trial % 3 == 0;
    const Integer exact = box_oracle(scaled(radii, p), squared);
    ASSERT_EQ(multi_sum_lhs_exact(radii, p, squared), exact);
    for (std::uint32_t k = 1; k <= 3; ++k) {
      ASSERT_EQ(multi_sum_lhs({radii, p, squared, k}), Residue::from_integer(exact, Modulus(p, k)));
    }
    ASSERT_EQ(multi_sum_rhs(radii, squared), box_oracle(radii, squared));
  }
}

TEST(MultiSum, TermBudget) {
  EXPECT_THROW(multi_sum_lhs({{3, 3, 3}, 37, false, 3}, 1000), TermBudgetExceeded);
  EXPECT_THROW(multi_sum_lhs({{}, 3, false, 3}), ParamOutOfRange);
  EXPECT_THROW(multi_sum_lhs({{1, 0}, 3, false, 3}), ParamOutOfRange);
}

TEST(FastPath, Examples) {
  EXPECT_EQ(theorem1_fast_lhs(3, 1, 1, 1, 3).value(), 1u);
  EXPECT_EQ(theorem1_fast_lhs(5, 2, 1, 1, 3).value(), 2u);
  EXPECT_EQ(theorem1_fast_lhs(3, 1, 1, 2, 1), multi_sum_lhs({{1, 1, 2}, 3, false, 1}));
}

TEST(FastPath, AgreesWithOracleExactly) {
  for (const std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
      for (std::uint32_t s = 1; s <= 3; ++s) {
        for (std::uint32_t t = 1; t <= 3; ++t) {
          if (p == 7 && r * s * t > 8) continue;
          for (std::uint32_t k = 1; k <= 4; ++k) {
            ASSERT_EQ(theorem1_fast_lhs(p, r, s, t, k), multi_sum_lhs({{r, s, t}, p, false, k}))
                << p << " " << r << s << t << " k=" << k;
          }
        }
      }
    }
  }
}

TEST(Theorem1, Examples) {
  EXPECT_TRUE(verify_theorem1(3, 1, 1, 1).passed());
  EXPECT_TRUE(verify_theorem1(5, 2, 3, 1).passed());
  const CheckReport seven = verify_theorem1(7, 1, 1, 1);
  EXPECT_TRUE(seven.passed());
  EXPECT_EQ(seven.rhs, "1");
  EXPECT_EQ(seven.modulus->k(), 3u);
  EXPECT_THROW(verify_theorem1(2, 1, 1, 1), PrimeTooSmall);
}

TEST(Theorem1, LowerPowersFollow) {
  for (const std::uint32_t p : {3u, 5u}) {
    for (std::uint32_t r = 1; r <= 2; ++r) {
      const std::vector<std::uint32_t> radii = {r, 2, 1};
      const Residue lhs = multi_sum_lhs({radii, p, false, 3});
      const Residue rhs = Residue::from_integer(multi_sum_rhs(radii, false), Modulus(p, 3));
      ASSERT_EQ(lhs, rhs);
      for (std::uint32_t k = 1; k <= 2; ++k) {
        ASSERT_EQ(lhs.reduced(k), rhs.reduced(k));
      }
    }
  }
}

TEST(TheoremTT, Examples) {
  const CheckReport three = verify_theoremTT(3, 1, 1, 1);
  EXPECT_TRUE(three.passed());
  EXPECT_EQ(three.lhs, "1");
  EXPECT_EQ(three.modulus->k(), 2u);
  EXPECT_TRUE(verify_theoremTT(5, 1, 1, 1).passed());
  const CheckReport two = verify_theoremTT(5, 2, 1, 1);
  EXPECT_TRUE(two.passed());
  EXPECT_EQ(two.rhs, "2");
}

TEST(Decomposition, Examples) {
  const CheckReport first = decomposition_check(5, 0, 0, 1);
  EXPECT_TRUE(first.passed()) << first.note;
  EXPECT_EQ(first.lhs, "1");
  const CheckReport second = decomposition_check(3, 1, 0, 1);
  EXPECT_TRUE(second.passed()) << second.note;
  EXPECT_EQ(second.rhs, "1");
  EXPECT_TRUE(decomposition_check(5, 0, 1, 2).passed());
}

TEST(Decomposition, ComponentsArePIntegral) {
  for (const std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t i = 0; i <= 2; ++i) {
      for (std::uint32_t j = 0; j <= 2; ++j) {
        const DecompositionTriple parts = decomposition_components(p, i, j, 2);
        EXPECT_TRUE(is_p_integral(parts.a, p));
        EXPECT_TRUE(is_p_integral(parts.b, p));
        EXPECT_TRUE(is_p_integral(parts.c, p));
      }
    }
  }
}

TEST(Decomposition, BlocksReassembleTheExactSum) {
  for (const std::uint32_t p : {3u, 5u}) {
    for (std::uint32_t r = 1; r <= 2; ++r) {
      for (std::uint32_t s = 1; s <= 2; ++s) {
        for (std::uint32_t t = 1; t <= 2; ++t) {
          const CheckReport report = decomposition_total_check(p, r, s, t);
          ASSERT_TRUE(report.passed()) << p << " " << r << s << t << ": " << report.lhs << " vs " << report.rhs;
          ASSERT_FALSE(report.modulus.has_value());
        }
      }
    }
  }
}

TEST(Section5, News1AtThree) {
  // 1 + 3*1 + 3*1 + 3*4 = 19 = 1 mod 9
  Integer sum = 0;
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; a + b < 3; ++b)
      for (std::uint64_t c = 0; a + b + c < 3; ++c) {
        const std::vector<std::uint64_t> m = {a, b, c};
        const Integer x = multinomial_exact(m);
        sum += x * x;
      }
  EXPECT_EQ(sum, 19);
  const CheckReport report = verify_section5_step(Section5Id::NEWS1, 3);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.lhs, "1");
}

TEST(Section5, Examples) {
  EXPECT_TRUE(verify_section5_step(Section5Id::NEWS2_2, 5, 0u).passed());
  const CheckReport s2 = verify_section5_step(Section5Id::S2, 5);
  EXPECT_TRUE(s2.passed());
  EXPECT_EQ(s2.lhs, "1");  // 6 * 46 = 276
}

TEST(Section5, Errors) {
  EXPECT_THROW(verify_section5_step(Section5Id::NEWS2_2, 7), MissingParam);
  EXPECT_THROW(verify_section5_step(Section5Id::NEWS2_2, 7, 4u), ParamOutOfRange);
  EXPECT_THROW(verify_section5_step(Section5Id::NEWS1, 9), ParamOutOfRange);
  EXPECT_THROW(section5_from_string("NEWS3"), UnknownId);
}

TEST(Section5, StepsHoldOnSmallPrimes) {
  for (const std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
    for (const Section5Id id : all_section5()) {
      if (id == Section5Id::CH1) continue;
      if (id == Section5Id::NEWS2_2) {
        for (std::uint32_t b = 0; b <= (p - 1) / 2; ++b) {
          ASSERT_TRUE(verify_section5_step(id, p, b).passed()) << "p=" << p << " b=" << b;
        }
      } else {
        ASSERT_TRUE(verify_section5_step(id, p).passed()) << to_string(id) << " p=" << p;
      }
    }
  }
}

// Starting the Legendre-weighted sum at a = 1 drops the a = 0 term
// (-1)^{p'} (-H_{p'}), which is not 0 mod p; from a = 0 it vanishes.
TEST(Section5, WeightedHarmonicSumNeedsTheZeroTerm) {
  for (const std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    EXPECT_EQ(verify_section5_step(Section5Id::CH1, p).status, Status::fail) << p;
    EXPECT_TRUE(verify_section5_step(Section5Id::CH1_A0, p).passed()) << p;
  }
  EXPECT_EQ(verify_section5_step(Section5Id::CH1, 3).lhs, "2");
}

TEST(Section6, Examples) {
  const CheckReport plain = verify_section6(Section6Id::PLAIN_DOUBLE, 5, Params{{"r", 1}, {"s", 1}});
  EXPECT_TRUE(plain.passed());
  EXPECT_EQ(plain.lhs, "1");
  const CheckReport kernel = verify_section6(Section6Id::KERNEL, 5);
  EXPECT_TRUE(kernel.passed());
  EXPECT_EQ(kernel.lhs, "24");
  const CheckReport total = verify_section6(Section6Id::CT_TOTAL, 3);
  EXPECT_TRUE(total.passed());
  EXPECT_EQ(total.modulus->k(), 2u);
}

// binom(6,3) - 1 = 19 is not 1 mod 27.
TEST(Section6, PlainDoubleFailsAtThreeForUnitRadii) {
  const CheckReport report = verify_section6(Section6Id::PLAIN_DOUBLE, 3, Params{{"r", 1}, {"s", 1}});
  EXPECT_EQ(report.status, Status::fail);
  EXPECT_EQ(report.lhs, "19");
  EXPECT_EQ(report.rhs, "1");
  EXPECT_TRUE(report.note.empty());
}

TEST(Section6, Errors) {
  EXPECT_THROW(verify_section6(Section6Id::PROP7, 3, Params{{"n", 2}, {"r1", 1}, {"r2", 1}}), PrimeTooSmall);
  EXPECT_THROW(verify_section6(Section6Id::PLAIN_DOUBLE, 5, Params{{"r", 0}, {"s", 1}}), ParamOutOfRange);
  EXPECT_THROW(verify_section6(Section6Id::SUPER5, 5, Params{{"r", 1}}), MissingParam);
  EXPECT_THROW(section6_from_string("PROP8"), UnknownId);
}

TEST(Section6, ChecksHoldOnSmallPrimes) {
  for (const std::uint32_t p : {5u, 7u, 11u, 13u}) {
    for (std::int64_t r = 1; r <= 3; ++r) {
      for (std::int64_t s = 1; s <= 3; ++s) {
        ASSERT_TRUE(verify_section6(Section6Id::PLAIN_DOUBLE, p, Params{{"r", r}, {"s", s}}).passed());
        ASSERT_TRUE(verify_section6(Section6Id::SUPER5, p, Params{{"r", r}, {"s", s}}).passed());
      }
    }
    for (const Section6Id id : {Section6Id::KERNEL, Section6Id::CT_PIECE1, Section6Id::CT_PIECE2, Section6Id::CT_TOTAL}) {
      const CheckReport report = verify_section6(id, p);
      ASSERT_TRUE(report.passed()) << to_string(id) << " p=" << p << " " << report.note;
    }
    ASSERT_TRUE(verify_section6(Section6Id::PROP7, p, Params{{"n", 3}, {"r1", 1}, {"r2", 2}, {"r3", 1}}).passed());
  }
}

TEST(Section6, SquaredDoubleAtUnitRadiiIsTheKernel) {
  for (const std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const CheckReport super5 = verify_section6(Section6Id::SUPER5, p, Params{{"r", 1}, {"s", 1}});
    const CheckReport kernel = verify_section6(Section6Id::KERNEL, p);
    EXPECT_EQ(super5.lhs, kernel.lhs) << p;
    EXPECT_EQ(super5.rhs, kernel.rhs) << p;
  }
}

TEST(Section6, TruncatedTriplesMatchTheorem) {
  for (const std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const Residue full = multi_sum_lhs({{1, 1, 1}, p, false, 3});
    const CheckReport total = verify_section6(Section6Id::CT_TOTAL, p);
    EXPECT_EQ(total.lhs, to_string(full.reduced(2))) << p;
    const CheckReport news1 = verify_section5_step(Section5Id::NEWS1, p);
    const Residue squared = multi_sum_lhs({{1, 1, 1}, p, true, 2});
    // the truncated and full squared sums need not agree; both must be 1 mod p^2
    EXPECT_EQ(news1.lhs, "1");
    EXPECT_EQ(squared.value(), 1u);
  }
}

TEST(OpenQuestion, Examples) {
  const auto three = explore_open_question(3, 3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0], three[1]);
  const auto five = explore_open_question(5, 2);
  EXPECT_EQ(five[0].value(), 4u);
  const CheckReport report = open_question_report(3, 4);
  EXPECT_EQ(report.status, Status::info);
  EXPECT_THROW(explore_open_question(3, 1), ParamOutOfRange);
  EXPECT_THROW(explore_open_question(97, 6, 1000), TermBudgetExceeded);
}

TEST(Abelian, Checks) {
  EXPECT_TRUE(verify_abelian(AbelianId::ORACLE, Params{{"alphabet", 3}, {"n", 4}}).passed());
  EXPECT_TRUE(verify_abelian(AbelianId::CENTRAL, Params{{"n", 25}}).passed());
  for (const std::int64_t p : {3, 5, 7, 11, 13}) {
    EXPECT_TRUE(verify_abelian(AbelianId::PARTIAL_SUM, Params{{"p", p}}).passed()) << p;
  }
}
