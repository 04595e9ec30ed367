#include <gtest/gtest.h>

#include "supercong/congruences.hpp"
#include "supercong/errors.hpp"

using namespace supercong;

namespace {

const std::vector<std::uint32_t> kSmallPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

}  // namespace

TEST(HarmonicCongruences, Examples) {
  const CheckReport c1 = check_harmonic_congruence(HarmonicCongruenceId::C1, 5);
  EXPECT_TRUE(c1.passed());
  EXPECT_EQ(c1.lhs, "0");
  EXPECT_EQ(c1.modulus->k(), 2u);

  const CheckReport c4 = check_harmonic_congruence(HarmonicCongruenceId::C4, 5);
  EXPECT_TRUE(c4.passed());
  EXPECT_EQ(c4.lhs, "19");
  EXPECT_EQ(c4.rhs, "19");

  EXPECT_TRUE(check_harmonic_congruence(HarmonicCongruenceId::C2, 7).passed());
}

TEST(HarmonicCongruences, PrimeTooSmall) {
  EXPECT_THROW(check_harmonic_congruence(HarmonicCongruenceId::C1, 3), PrimeTooSmall);
  EXPECT_THROW(check_harmonic_congruence(HarmonicCongruenceId::C1, 9), ParamOutOfRange);
}

TEST(HarmonicCongruences, CatalogHasTenEntries) {
  EXPECT_EQ(harmonic_congruence_catalog().size(), 10u);
  for (const HarmonicCongruenceSpec& spec : harmonic_congruence_catalog()) {
    EXPECT_EQ(spec.min_prime, 5u);
    EXPECT_EQ(harmonic_congruence_from_string(to_string(spec.id)), spec.id);
  }
}

TEST(HarmonicCongruences, SweepSmallPrimes) {
  for (const std::uint32_t p : kSmallPrimes) {
    if (p < 5) continue;
    for (const HarmonicCongruenceSpec& spec : harmonic_congruence_catalog()) {
      const CheckReport report = check_harmonic_congruence(spec.id, p);
      ASSERT_TRUE(report.passed()) << to_string(spec.id) << " p=" << p << " " << report.note;
    }
  }
}

TEST(Lemmas, Examples) {
  const CheckReport r = check_lemma_congruence(LemmaId::BINOM_P_R, 5, Params{{"r", 2}});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.lhs, "10");

  const CheckReport central = check_lemma_congruence(LemmaId::CENTRAL_SUM, 5);
  EXPECT_TRUE(central.passed());
  EXPECT_EQ(central.lhs, "24");  // 99 = -1 mod 25

  const CheckReport wolst = check_lemma_congruence(LemmaId::WOLSTENHOLME, 5, Params{{"a", 2}, {"b", 1}});
  EXPECT_TRUE(wolst.passed());
  EXPECT_EQ(wolst.lhs, "2");

  const CheckReport power = check_lemma_congruence(LemmaId::POWER_SUM, 5, Params{{"i", 2}});
  EXPECT_TRUE(power.passed());
  EXPECT_EQ(power.lhs, "0");
}

TEST(Lemmas, ParameterErrors) {
  EXPECT_THROW(check_lemma_congruence(LemmaId::BINOM_P_R, 5, Params{{"r", 5}}), ParamOutOfRange);
  EXPECT_THROW(check_lemma_congruence(LemmaId::POWER_SUM, 5, Params{{"i", 8}}), ParamOutOfRange);
  EXPECT_THROW(check_lemma_congruence(LemmaId::K_PLUS_P, 7, Params{{"k", 3}, {"m", 3}}), ParamOutOfRange);
  EXPECT_THROW(check_lemma_congruence(LemmaId::MID_CENTRAL, 7, Params{{"c", 3}}), ParamOutOfRange);
  EXPECT_THROW(check_lemma_congruence(LemmaId::ZHS, 7, Params{}), MissingParam);
  EXPECT_THROW(check_lemma_congruence(LemmaId::WOLSTENHOLME, 3, Params{{"a", 2}, {"b", 1}}), PrimeTooSmall);
  EXPECT_THROW(lemma_from_string("B3"), UnknownId);
}

// The lower-order sum with the 2^j/j inner weight is 1 mod 3 at p = 3, not 0;
// the check reports that faithfully.
TEST(Lemmas, FirstBinaryWeightedSumFailsAtThree) {
  const CheckReport report = check_lemma_congruence(LemmaId::B1, 3);
  EXPECT_EQ(report.status, Status::fail);
  EXPECT_EQ(report.lhs, "1");
  EXPECT_EQ(report.rhs, "0");
}

TEST(Lemmas, FullGridsOnSmallPrimes) {
  for (const std::uint32_t p : kSmallPrimes) {
    for (const LemmaId id : all_lemmas()) {
      if (p < min_prime(id) || (id == LemmaId::B1 && p == 3)) continue;
      for (const Params& params : lemma_parameter_grid(id, p)) {
        const CheckReport report = check_lemma_congruence(id, p, params);
        ASSERT_TRUE(report.passed()) << to_string(id) << " p=" << p << " " << params.flat() << " " << report.lhs
                                     << " vs " << report.rhs;
      }
    }
  }
}

TEST(Lemmas, HalfHarmonicHasTwoParts) {
  const auto grid = lemma_parameter_grid(LemmaId::HALF_HARMONIC, 13);
  ASSERT_EQ(grid.size(), 2u);
  EXPECT_EQ(grid[0].get("part"), 1);
  EXPECT_EQ(grid[1].get("part"), 2);
}

TEST(Lemmas, ModularityAcrossExponents) {
  // a pass at p^k implies a pass at every lower power
  for (const std::uint32_t p : {5u, 7u, 11u}) {
    for (const Params& params : lemma_parameter_grid(LemmaId::BINOM_P_R, p)) {
      const CheckReport report = check_lemma_congruence(LemmaId::BINOM_P_R, p, params);
      ASSERT_TRUE(report.passed());
      const Modulus m = *report.modulus;
      for (std::uint32_t k = 1; k < m.k(); ++k) {
        const Residue lhs = Residue::from_integer(Integer(report.lhs), m).reduced(k);
        const Residue rhs = Residue::from_integer(Integer(report.rhs), m).reduced(k);
        ASSERT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(IndexSpread, SmallAndLargePrimes) {
  EXPECT_EQ(index_spread(7).size(), 7u);
  const auto large = index_spread(101);
  EXPECT_EQ(large, (std::vector<std::int64_t>{0, 1, 2, 3, 49, 50, 51, 98, 99, 100}));
}

TEST(ShiftedBinomials, Examples) {
  const CheckReport cc1 = check_cc(CCId::CC1, 5, 0, 0, Params{{"k", 3}, {"m", 1}});
  EXPECT_TRUE(cc1.passed());
  EXPECT_EQ(cc1.lhs, "3");
  EXPECT_EQ(cc1.rhs, "3");

  const CheckReport cc22 = check_cc(CCId::CC22, 3, 0, 1, Params{{"r", 1}});
  EXPECT_TRUE(cc22.passed());
  EXPECT_EQ(cc22.lhs, "3");

  const CheckReport cc11 = check_cc(CCId::CC11, 5, 1, 1, Params{{"k", 2}});
  EXPECT_TRUE(cc11.passed());
  EXPECT_EQ(cc11.modulus->k(), 2u);
}

TEST(ShiftedBinomials, CC11ExampleByHand) {
  // binom(12,7) + binom(12,6) + binom(12,5) = 792 + 924 + 792 = 2508 = 8 mod 25
  const CheckReport report = check_cc(CCId::CC11, 5, 1, 1, Params{{"k", 2}});
  EXPECT_EQ(report.lhs, "8");
}

TEST(ShiftedBinomials, Errors) {
  EXPECT_THROW(check_cc(CCId::CC22, 5, 1, 1, Params{{"r", 0}}), ParamOutOfRange);
  EXPECT_THROW(check_cc(CCId::CC1, 5, 1, 1, Params{{"k", 2}, {"m", 3}}), ParamOutOfRange);
  EXPECT_THROW(check_cc(CCId::CC11, 5, 1, 1, Params{{"k", 5}}), ParamOutOfRange);
}

TEST(ShiftedBinomials, GridsOnSmallPrimes) {
  for (const std::uint32_t p : {3u, 5u, 7u}) {
    for (const CCId id : all_cc()) {
      for (std::uint32_t i = 0; i <= 2; ++i) {
        for (std::uint32_t j = 0; j <= 2; ++j) {
          for (const Params& extra : cc_parameter_grid(id, p)) {
            const CheckReport report = check_cc(id, p, i, j, extra);
            ASSERT_TRUE(report.passed()) << to_string(id) << " p=" << p << " i=" << i << " j=" << j << " "
                                         << extra.flat();
          }
        }
      }
    }
  }
}
