#include <gtest/gtest.h>

#include <chrono>

#include "ncov/error.hpp"
#include "ncov/numtheory.hpp"

using namespace ncov;

TEST(NumTheory, GcdExamples) {
  EXPECT_EQ(gcd_qpow(2, 4, 6, -1, -1), 3);
  EXPECT_EQ(gcd_qpow(3, 2, 2, +1, +1), 10);
  EXPECT_EQ(gcd_qpow(2, 3, 6, +1, -1), 9);
}

TEST(NumTheory, GcdAgreesWithDirect) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (std::uint64_t a = 1; a <= 10; ++a)
      for (std::uint64_t b = 1; b <= 10; ++b)
        for (int sa : {-1, 1})
          for (int sb : {-1, 1})
            ASSERT_EQ(gcd_qpow(q, a, b, sa, sb), gcd_qpow_direct(q, a, b, sa, sb))
                << q << " " << a << " " << b << " " << sa << " " << sb;
}

TEST(NumTheory, Factor) {
  auto f = factor(bigint("1208925819614629174706175"));  // 2^80 - 1
  bigint prod = 1;
  for (auto& [p, e] : f) {
    EXPECT_TRUE(is_probable_prime(p));
    for (int i = 0; i < e; ++i) prod *= p;
  }
  EXPECT_EQ(prod, bigint("1208925819614629174706175"));
  // two 50-bit primes
  bigint a("1900857799450121"), b("1808982826037837");
  auto g = factor(a * b);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.begin()->first, b);
}

TEST(NumTheory, PpdExamples) {
  EXPECT_TRUE(primitive_prime_divisors(2, 6).empty());
  EXPECT_TRUE(primitive_prime_divisors(7, 2).empty());
  EXPECT_EQ(primitive_prime_divisors(2, 4), (std::set<bigint>{5}));
  EXPECT_EQ(primitive_prime_divisors(2, 3), (std::set<bigint>{7}));
  EXPECT_THROW(primitive_prime_divisors(6, 3), Error);
}

TEST(NumTheory, PpdBound) {
  EXPECT_TRUE(ppd_bound_check(5, 4));
  EXPECT_TRUE(ppd_bound_check(7, 3));
  EXPECT_FALSE(ppd_bound_check(5, 3));
}

TEST(NumTheory, Bertrand) {
  EXPECT_EQ(bertrand_number(5), 3u);
  EXPECT_EQ(bertrand_number(6), 4u);
  EXPECT_EQ(bertrand_number(7), 5u);
  EXPECT_EQ(bertrand_number(12), 7u);
  EXPECT_EQ(bertrand_number(20), 17u);
  for (std::uint64_t n = 5; n < 400; ++n) {
    auto t = bertrand_number(n);
    if (n != 6) EXPECT_TRUE(is_prime(t));
    EXPECT_LT(n, 2 * t);
    EXPECT_LE(t, n - 2);
    if (n >= 8) EXPECT_LE(t, n - 3);
    EXPECT_NE(n % t, 0u);
  }
}

TEST(NumTheory, SingerOrders) {
  EXPECT_EQ(singer_order({SingerFamily::Sp, 4, 4}), 17);
  EXPECT_EQ(singer_order({SingerFamily::SL, 2, 7}), 8);
  EXPECT_EQ(singer_order({SingerFamily::GL, 3, 2}), 7);
  EXPECT_EQ(singer_order({SingerFamily::GU, 3, 3}), 28);
  EXPECT_EQ(singer_order({SingerFamily::SU, 5, 2}), 11);
  EXPECT_EQ(singer_order({SingerFamily::Ominus, 4, 3}), 10);
  EXPECT_EQ(singer_order({SingerFamily::Omegaminus, 4, 3}), 5);
  try {
    singer_order({SingerFamily::SU, 3, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_singer_cycle);
  }
  try {
    singer_order({SingerFamily::Omegaminus, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_singer_cycle);
  }
  EXPECT_THROW(singer_order({SingerFamily::Sp, 3, 2}), Error);
}

TEST(NumTheory, ZsigmondyRange) {
  auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t q = 2; q <= 127; ++q) {
    if (!prime_power(q)) continue;
    for (std::uint64_t t = 2; t <= 20; ++t) {
      auto P = primitive_prime_divisors(q, t);
      EXPECT_EQ(P.empty(), is_zsigmondy_exception(q, t)) << q << " " << t;
      EXPECT_EQ(has_primitive_prime_divisor(q, t), !P.empty());
      for (const auto& r : P) EXPECT_TRUE(ppd_bound_check(r, t)) << r << " " << q << " " << t;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(secs, 1.0);
}
