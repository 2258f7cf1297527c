#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "ncov/factor.hpp"

namespace ncov {

// gcd(q^a + sa, q^b + sb) for signs sa, sb in {+1, -1}, by the closed form.
bigint gcd_qpow(std::uint64_t q, std::uint64_t a, std::uint64_t b, int sa, int sb);
bigint gcd_qpow_direct(std::uint64_t q, std::uint64_t a, std::uint64_t b, int sa, int sb);

// Phi_t(q)
bigint cyclotomic_value(std::uint64_t t, const bigint& q);

// Primes dividing q^t - 1 but no q^i - 1 with i < t.
std::set<bigint> primitive_prime_divisors(std::uint64_t q, std::uint64_t t);
bool has_primitive_prime_divisor(std::uint64_t q, std::uint64_t t);
bool is_zsigmondy_exception(std::uint64_t q, std::uint64_t t);

bool ppd_bound_check(const bigint& r, std::uint64_t t);

// 3, 4, 5 for n = 5, 6, 7; otherwise the largest prime t with n/2 < t <= n-3.
std::uint64_t bertrand_number(std::uint64_t n);

enum class SingerFamily { GL, SL, GU, SU, Sp, Ominus, Omegaminus };

struct SingerSpec {
  SingerFamily family;
  std::uint64_t n;
  std::uint64_t q;
};

SingerFamily parse_singer_family(const std::string& s);
std::string to_string(SingerFamily f);

bigint singer_order(const SingerSpec& spec);

}  // namespace ncov
