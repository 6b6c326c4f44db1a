#include "frobenius/core.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace frobenius {
namespace {

TEST(GcdTest, Examples) {
  EXPECT_EQ(gcd(0, 7), 7u);
  EXPECT_EQ(gcd(29, 23), 1u);
  EXPECT_EQ(gcd(1288, 58), 2u);
  EXPECT_EQ(gcd(0, 0), 0u);
}

TEST(GcdTest, DividesBothAndCertificateReconstructs) {
  for (Nat a = 0; a <= 120; ++a) {
    for (Nat b = 0; b <= 120; ++b) {
      Nat g = gcd(a, b);
      EXPECT_EQ(g, oracle::euclid(a, b));
      if (a == 0 && b == 0) {
        continue;
      }
      EXPECT_EQ(a % g, 0u);
      EXPECT_EQ(b % g, 0u);
      auto [eg, x, y] = extended_gcd(a, b);
      EXPECT_EQ(eg, g);
      EXPECT_EQ(static_cast<Int>(a) * x + static_cast<Int>(b) * y, static_cast<Int>(g))
          << a << ", " << b;
    }
  }
}

TEST(ExtendedGcdTest, Examples) {
  auto one = extended_gcd(1, 1);
  EXPECT_EQ(one.g, 1u);
  EXPECT_EQ(one.x + one.y, 1);

  auto prime = extended_gcd(29, 23);
  EXPECT_EQ(prime.g, 1u);
  EXPECT_EQ(29 * prime.x + 23 * prime.y, 1);

  auto six_four = extended_gcd(6, 4);
  EXPECT_EQ(six_four.g, 2u);
  EXPECT_EQ(six_four.x, 1);
  EXPECT_EQ(six_four.y, -1);
}

TEST(ExtendedGcdTest, RejectsBothZero) {
  EXPECT_THROW(extended_gcd(0, 0), DomainError);
}

TEST(ExtendedGcdTest, LargeInputs) {
  const Nat a = kMaxInput;
  const Nat b = kMaxInput - 1;
  auto [g, x, y] = extended_gcd(a, b);
  EXPECT_EQ(g, 1u);
  EXPECT_EQ(static_cast<__int128>(a) * x + static_cast<__int128>(b) * y, 1);
}

TEST(ModInverseTest, Examples) {
  EXPECT_EQ(mod_inverse(1, 5), 1u);
  EXPECT_EQ(mod_inverse(23, 29), 24u);
  EXPECT_EQ(mod_inverse(29, 23), 4u);
  EXPECT_EQ(mod_inverse(7, 1), 0u);
}

TEST(ModInverseTest, Errors) {
  EXPECT_THROW(mod_inverse(6, 4), DomainError);
  EXPECT_THROW(mod_inverse(3, 0), DomainError);
}

TEST(ModInverseTest, InverseProperty) {
  for (Nat m = 1; m <= 200; ++m) {
    for (Nat a = 0; a <= 200; ++a) {
      if (gcd(a, m) != 1) {
        continue;
      }
      Nat inv = mod_inverse(a, m);
      EXPECT_LT(inv, m);
      EXPECT_EQ(a * inv % m, 1 % m) << a << " mod " << m;
    }
  }
}

TEST(PowModTest, Examples) {
  EXPECT_EQ(pow_mod(2, 0, 7), 1u);
  EXPECT_EQ(pow_mod(3, 3, 7), 6u);
  EXPECT_EQ(pow_mod(2, 3, 5), 3u);
  EXPECT_EQ(pow_mod(5, 0, 1), 0u);
  EXPECT_THROW(pow_mod(2, 3, 0), DomainError);
}

TEST(PowModTest, AgreesWithRepeatedMultiplication) {
  for (Nat m = 1; m <= 1000; m += 37) {
    for (Nat base = 0; base <= 200; base += 7) {
      Nat expected = 1 % m;
      for (Nat exp = 0; exp <= 200; ++exp) {
        ASSERT_EQ(pow_mod(base, exp, m), expected) << base << "^" << exp << " mod " << m;
        expected = expected * base % m;
      }
    }
  }
}

TEST(IsPrimeTest, Examples) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(29));
  EXPECT_FALSE(is_prime(561));
  EXPECT_TRUE(is_prime(kMaxInput));  // 2^31 - 1 is a Mersenne prime
  EXPECT_TRUE(is_prime(1000000007));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST(IsPrimeTest, AgreesWithTrialDivision) {
  for (Nat n = 0; n < 20000; ++n) {
    ASSERT_EQ(is_prime(n), oracle::trial_prime(n)) << n;
  }
}

TEST(FactorizeTest, Examples) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(667), (std::vector<PrimePower>{{23, 1}, {29, 1}}));
  EXPECT_EQ(factorize(675), (std::vector<PrimePower>{{3, 3}, {5, 2}}));
  EXPECT_EQ(factorize(kMaxInput), (std::vector<PrimePower>{{kMaxInput, 1}}));
  EXPECT_THROW(factorize(0), DomainError);
}

TEST(FactorizeTest, RoundTripsAndFactorsArePrime) {
  for (Nat n = 1; n <= 5000; ++n) {
    Nat product = 1;
    Nat last = 0;
    for (auto [p, r] : factorize(n)) {
      EXPECT_TRUE(is_prime(p));
      EXPECT_GT(p, last);
      last = p;
      for (Nat i = 0; i < r; ++i) {
        product *= p;
      }
    }
    EXPECT_EQ(product, n);
  }
}

TEST(CoprimePairTest, Validation) {
  EXPECT_NO_THROW(CoprimePair(29, 23));
  EXPECT_NO_THROW(CoprimePair(1, 1));
  EXPECT_THROW(CoprimePair(6, 4), DomainError);
  EXPECT_THROW(CoprimePair(0, 5), DomainError);
  EXPECT_THROW(CoprimePair(kMaxInput + 2, 1), DomainError);
  EXPECT_NO_THROW(OddCoprimePair(9, 25));
  EXPECT_THROW(OddCoprimePair(2, 3), DomainError);
  EXPECT_THROW(OddCoprimePair(9, 15), DomainError);
}

TEST(ToBigTest, WideValues) {
  __int128 big = static_cast<__int128>(1) << 100;
  EXPECT_EQ(to_big(big), BigInt(1) << 100);
  EXPECT_EQ(to_big(-big - 3), -(BigInt(1) << 100) - 3);
  EXPECT_EQ(to_big(0), 0);
}

}  // namespace
}  // namespace frobenius
