#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "parallelo/error.hpp"
#include "parallelo/exact_math.hpp"
#include "parallelo/sieve.hpp"

namespace parallelo {
namespace {

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(12, 18), 6);
  EXPECT_EQ(gcd(1, 0), 1);
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(gcd(-12, 18), 6);
  EXPECT_EQ(gcd(0, -7), 7);
}

TEST(Gcd, MatchesEuclidOnRandomPairs) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000'000, 1'000'000'000'000);
  for (int i = 0; i < 20000; ++i) {
    std::int64_t a = dist(rng), b = dist(rng);
    ASSERT_EQ(gcd(a, b), oracle::euclid_gcd(a, b)) << a << " " << b;
  }
}

TEST(Egcd, Examples) {
  auto r = egcd(3, 1);
  EXPECT_EQ(r.g, 1);
  EXPECT_EQ(3 * r.x + 1 * r.y, 1);

  auto big = egcd(240, 46);
  EXPECT_EQ(big.g, 2);
  EXPECT_EQ(240 * big.x + 46 * big.y, 2);

  auto unit = egcd(1, 0);
  EXPECT_EQ(unit.g, 1);
  EXPECT_EQ(unit.x, 1);
  EXPECT_EQ(unit.y, 0);
}

TEST(Egcd, RejectsZeroPair) { EXPECT_THROW(egcd(0, 0), InvalidArgument); }

TEST(Egcd, BezoutIdentityWithNegatives) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int i = 0; i < 5000; ++i) {
    std::int64_t a = dist(rng), b = dist(rng);
    if (a == 0 && b == 0) continue;
    auto r = egcd(a, b);
    ASSERT_GT(r.g, 0);
    ASSERT_EQ(r.g, oracle::euclid_gcd(a, b));
    ASSERT_EQ(a * r.x + b * r.y, r.g);
  }
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inverse(2, 5), 3);
  EXPECT_EQ(mod_inverse(3, 7), 5);
  EXPECT_THROW(mod_inverse(2, 4), InvalidArgument);
  EXPECT_THROW(mod_inverse(1, 1), InvalidArgument);
}

TEST(ModInverse, AllUnitsBelow200) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (oracle::euclid_gcd(a, n) != 1) continue;
      std::int64_t b = mod_inverse(a, n);
      ASSERT_GE(b, 1);
      ASSERT_LT(b, n);
      ASSERT_EQ(a * b % n, 1 % n);
    }
  }
}

TEST(FloorCeilDiv, Examples) {
  EXPECT_EQ(floor_div(7, 3), 2);
  EXPECT_EQ(ceil_div(7, 3), 3);
  EXPECT_EQ(floor_div(-1, 3), -1);
  EXPECT_EQ(ceil_div(6, 3), 2);
  EXPECT_EQ(ceil_div(-7, 3), -2);
  EXPECT_THROW(floor_div(1, 0), InvalidArgument);
}

TEST(Frac, Examples) {
  EXPECT_EQ(frac(Rational(3, 2)), Rational(1, 2));
  EXPECT_EQ(frac(Rational(-3, 2)), Rational(1, 2));
  EXPECT_EQ(frac(Rational(4, 1)), Rational(0));
}

TEST(Frac, ReflectionProperty) {
  for (std::int64_t den = 1; den <= 30; ++den) {
    for (std::int64_t num = -100; num <= 100; ++num) {
      Rational x(num, den);
      Rational sum = frac(x) + frac(-x);
      EXPECT_EQ(sum, x.is_integer() ? Rational(0) : Rational(1)) << x;
    }
  }
}

TEST(RationalArithmetic, NormalizesAndCompares) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(3, 4).str(), "3/4");
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

TEST(RationalArithmetic, OverflowIsDetected) {
  Rational huge(INT64_MAX);
  EXPECT_THROW(huge + Rational(1), OverflowError);
  EXPECT_THROW(huge * Rational(2), OverflowError);
  // Cross-multiplication in the comparison is widened, so this is fine.
  EXPECT_LT(Rational(INT64_MAX - 1, INT64_MAX), Rational(1));
}

TEST(BigRationalConversion, NarrowsOnlyWhenItFits) {
  BigRational small(Rational(5, 7));
  EXPECT_TRUE(small.fits_int64());
  EXPECT_EQ(small.to_rational(), Rational(5, 7));
  BigRational big(mpz_class("100000000000000000000000"), mpz_class(3));
  EXPECT_FALSE(big.fits_int64());
  EXPECT_THROW(big.to_rational(), OverflowError);
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (std::int64_t n = -5; n <= 5000; ++n) {
    bool trial = n >= 2;
    for (std::int64_t p = 2; p * p <= n && trial; ++p) trial = n % p != 0;
    ASSERT_EQ(is_prime(n), trial) << n;
  }
  EXPECT_TRUE(is_prime(9973));
  EXPECT_TRUE(is_prime(1'000'000'007));
  EXPECT_FALSE(is_prime(3'215'031'751));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(SquarefreeDivisors, Examples) {
  using D = std::vector<SignedDivisor>;
  EXPECT_EQ(squarefree_divisors(1), (D{{1, 1}}));
  EXPECT_EQ(squarefree_divisors(12), (D{{1, 1}, {2, -1}, {3, -1}, {6, 1}}));
  EXPECT_EQ(squarefree_divisors(2), (D{{1, 1}, {2, -1}}));
}

TEST(SquarefreeDivisors, CountIsTwoToOmegaAndSignsAreMobius) {
  auto sieve = build_sieves(3000);
  for (std::int64_t s = 1; s <= 3000; ++s) {
    auto with_sieve = squarefree_divisors(s, &sieve);
    auto without = squarefree_divisors(s);
    ASSERT_EQ(with_sieve, without);
    ASSERT_EQ(with_sieve.size(), std::size_t{1} << prime_factors(s).size());
    for (const auto& [d, mu] : with_sieve) {
      ASSERT_EQ(s % d, 0);
      ASSERT_EQ(mu, oracle::mobius(d));
    }
  }
}

TEST(LegendreTotient, Examples) {
  EXPECT_EQ(legendre_totient(Rational(10), 6), 3);
  EXPECT_EQ(legendre_totient_enumerate(Rational(10), 6), 3);  // {1, 5, 7}
  for (std::int64_t x = 0; x <= 50; ++x) EXPECT_EQ(legendre_totient(Rational(x), 1), x);
  EXPECT_EQ(legendre_totient(Rational(7, 2), 1), 3);
  EXPECT_EQ(legendre_totient(Rational(0), 30), 0);
  EXPECT_THROW(legendre_totient(Rational(-1), 3), InvalidArgument);
}

TEST(LegendreTotient, MoebiusSumMatchesEnumeration) {
  auto sieve = build_sieves(100);
  for (std::int64_t modulus = 1; modulus <= 100; ++modulus) {
    for (std::int64_t x = 0; x <= 500; ++x) {
      Rational r(x);
      ASSERT_EQ(legendre_totient(r, modulus, &sieve), legendre_totient_enumerate(r, modulus)) << x << " " << modulus;
    }
    for (std::int64_t num = 0; num <= 300; ++num) {
      Rational r(num, 13);
      ASSERT_EQ(legendre_totient(r, modulus), legendre_totient_enumerate(r, modulus)) << r << " " << modulus;
    }
  }
}

TEST(LegendreTotient, DiagonalIsEulerPhi) {
  auto sieve = build_sieves(10'000);
  for (std::int64_t m = 1; m <= 10'000; ++m) ASSERT_EQ(legendre_totient(Rational(m), m, &sieve), sieve.phi(m)) << m;
}

}  // namespace
}  // namespace parallelo
