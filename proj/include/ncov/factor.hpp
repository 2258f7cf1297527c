#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace ncov {

using bigint = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);
bool is_probable_prime(const bigint& n);

// Prime factorization. Exact for inputs below 2^127 (rho + ECM on 128-bit
// Montgomery arithmetic); beyond that falls back to rho on big integers.
std::map<bigint, int> factor(const bigint& n);
std::map<std::uint64_t, int> factor_u64(std::uint64_t n);

// (p, f) with q = p^f, or nullopt.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

bigint ipow(const bigint& b, std::uint64_t e);

}  // namespace ncov
