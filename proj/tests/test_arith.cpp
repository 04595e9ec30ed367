#include <gtest/gtest.h>

#include <random>

#include "supercong/arith.hpp"
#include "supercong/errors.hpp"

using namespace supercong;

TEST(MakeResidue, Examples) {
  EXPECT_EQ(make_residue(make_rational(1, 1), 5, 2).value(), 1u);
  EXPECT_EQ(make_residue(make_rational(25, 12), 5, 2).value(), 0u);
  EXPECT_EQ(make_residue(make_rational(1, 2), 3, 1).value(), 2u);
}

TEST(MakeResidue, NegativeNumerator) {
  EXPECT_EQ(make_residue(make_rational(-1, 1), 7, 2).value(), 48u);
  EXPECT_EQ(make_residue(make_rational(-1, 2), 5, 1).value(), 2u);
}

TEST(MakeResidue, RejectsPInDenominator) {
  EXPECT_THROW(make_residue(make_rational(1, 5), 5, 2), PDividesDenominator);
  EXPECT_THROW(make_residue(make_rational(7, 75), 5, 1), PDividesDenominator);
  // cancellation happens before the check
  EXPECT_EQ(make_residue(make_rational(10, 5), 5, 1).value(), 2u);
}

TEST(MakeRational, CanonicalForm) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(FermatQuotient, Examples) {
  EXPECT_EQ(fermat_quotient(3, 1).value(), 1u);
  EXPECT_EQ(fermat_quotient(5, 2).value(), 3u);
  EXPECT_EQ(fermat_quotient(7, 1).value(), 2u);
  EXPECT_EQ(fermat_quotient_exact(7), 9);
}

TEST(FermatQuotient, LiftsPowerOfTwo) {
  for (const std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      const Modulus hi(p, k + 1);
      const Residue q = Residue::from_integer(fermat_quotient(p, k).value(), hi);
      const Residue lhs = Residue::one(hi) + Residue(p, hi) * q;
      EXPECT_EQ(lhs, Residue(2, hi).pow(p - 1)) << "p=" << p << " k=" << k;
    }
  }
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(1, 3), 1);
  EXPECT_EQ(legendre(5, 3), -1);
  EXPECT_EQ(legendre(7, 3), 1);
  EXPECT_EQ(legendre(9, 3), 0);
  EXPECT_EQ(legendre(-1, 5), 1);
  EXPECT_EQ(legendre(-1, 7), -1);
}

TEST(Legendre, MultiplicativeAndMatchesSquares) {
  for (const std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    std::vector<bool> square(p, false);
    for (std::uint32_t x = 1; x < p; ++x) {
      square[x * x % p] = true;
    }
    for (std::int64_t a = -30; a <= 30; ++a) {
      const std::int64_t r = ((a % p) + p) % p;
      const int expected = r == 0 ? 0 : (square[r] ? 1 : -1);
      ASSERT_EQ(legendre(a, p), expected) << a << " mod " << p;
      for (std::int64_t b = -5; b <= 5; ++b) {
        ASSERT_EQ(legendre(a, p) * legendre(b, p), legendre(a * b, p));
      }
    }
  }
}

TEST(Residue, ModulusMismatchIsALogicError) {
  const Residue a(1, Modulus(5, 2));
  const Residue b(1, Modulus(5, 3));
  EXPECT_THROW(a + b, ModulusMismatch);
  EXPECT_THROW(a * b, ModulusMismatch);
  EXPECT_FALSE(a == b);
}

TEST(Residue, InverseOfNonUnitThrows) {
  EXPECT_THROW(Residue(10, Modulus(5, 2)).inverse(), NotInvertible);
  EXPECT_EQ(Residue(2, Modulus(5, 2)).inverse().value(), 13u);
}

TEST(Residue, RingAxiomsRandomized) {
  std::mt19937_64 rng(20240917);
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 3}, {7, 2}, {1021, 3}, {65521, 3}}) {
    const Modulus m(p, k);
    std::uniform_int_distribution<std::uint64_t> pick(0, m.value() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const Residue a(pick(rng), m), b(pick(rng), m), c(pick(rng), m);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a - a, Residue::zero(m));
      ASSERT_EQ(a + (-a), Residue::zero(m));
      if (a.is_unit()) {
        ASSERT_EQ(a * a.inverse(), Residue::one(m));
      }
    }
  }
}

TEST(Residue, ReductionIsAHomomorphismOnPIntegralRationals) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 5000);
  for (const std::uint32_t p : {3u, 5u, 7u, 13u}) {
    for (int trial = 0; trial < 300; ++trial) {
      long d1 = den(rng), d2 = den(rng);
      while (d1 % p == 0) ++d1;
      while (d2 % p == 0) ++d2;
      const Rational x = make_rational(num(rng), d1);
      const Rational y = make_rational(num(rng), d2);
      const Modulus m(p, 3);
      ASSERT_EQ(make_residue(x + y, m), make_residue(x, m) + make_residue(y, m));
      ASSERT_EQ(make_residue(x * y, m), make_residue(x, m) * make_residue(y, m));
      // lowering the precision commutes with reduction
      ASSERT_EQ(make_residue(x, m).reduced(2), make_residue(x, p, 2));
      ASSERT_EQ(make_residue(x, m).reduced(1), make_residue(x, p, 1));
    }
  }
}

TEST(Valuation, IntegersAndRationals) {
  EXPECT_EQ(padic_valuation(Integer(250), 5), 3);
  EXPECT_EQ(padic_valuation(Integer(0), 5), kInfiniteValuation);
  EXPECT_EQ(padic_valuation(make_rational(3, 50), 5), -2);
  EXPECT_TRUE(is_p_integral(make_rational(3, 50), 7));
  EXPECT_FALSE(is_p_integral(make_rational(3, 50), 5));
}

TEST(Primality, SmallNumbers) {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (std::uint64_t n = 0; n < 50; ++n) {
    EXPECT_EQ(is_prime(n), std::find(primes.begin(), primes.end(), n) != primes.end()) << n;
  }
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(1000001));
}

TEST(InverseMod, ExtendedGcd) {
  EXPECT_EQ(inverse_mod(3, 125), 42u);
  EXPECT_THROW(inverse_mod(5, 125), NotInvertible);
}
