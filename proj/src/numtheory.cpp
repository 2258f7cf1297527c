#include "ncov/numtheory.hpp"

#include <numeric>

#include "ncov/error.hpp"

namespace ncov {

namespace {

std::uint64_t prime_power_or_throw(std::uint64_t q) {
  if (!prime_power(q)) throw Error(Errc::unsupported_parameters, std::to_string(q) + " is not a prime power");
  return q;
}

}  // namespace

bigint gcd_qpow(std::uint64_t q, std::uint64_t a, std::uint64_t b, int sa, int sb) {
  if (q < 2 || a < 1 || b < 1) throw Error(Errc::unsupported_parameters, "gcd_qpow needs q >= 2, a, b >= 1");
  const std::uint64_t d = std::gcd(a, b);
  const bigint qd = ipow(bigint(q), d);
  const bigint small = (q % 2 == 1) ? 2 : 1;
  if (sa < 0 && sb < 0) return qd - 1;
  if (sa > 0 && sb > 0) return ((a / d) % 2 == 1 && (b / d) % 2 == 1) ? bigint(qd + 1) : small;
  // one plus, one minus: the "minus" exponent decides
  const std::uint64_t minus_exp = sa < 0 ? a : b;
  return (minus_exp / d) % 2 == 0 ? bigint(qd + 1) : small;
}

bigint gcd_qpow_direct(std::uint64_t q, std::uint64_t a, std::uint64_t b, int sa, int sb) {
  bigint x = ipow(bigint(q), a) + sa, y = ipow(bigint(q), b) + sb;
  return boost::multiprecision::gcd(x, y);
}

bigint cyclotomic_value(std::uint64_t t, const bigint& q) {
  // Phi_t(q) = prod_{d | t} (q^d - 1)^{mu(t/d)}
  bigint num = 1, den = 1;
  for (std::uint64_t d = 1; d <= t; ++d) {
    if (t % d) continue;
    std::uint64_t m = t / d;
    int mu = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    if (mu != 0 && m > 1) mu = -mu;
    if (mu == 1) num *= ipow(q, d) - 1;
    if (mu == -1) den *= ipow(q, d) - 1;
  }
  return num / den;
}

std::set<bigint> primitive_prime_divisors(std::uint64_t q, std::uint64_t t) {
  prime_power_or_throw(q);
  if (t < 2) throw Error(Errc::unsupported_parameters, "ppd needs t >= 2");
  // Every primitive prime divisor divides Phi_t(q); keep the ones of order exactly t.
  std::set<bigint> out;
  const bigint phi = cyclotomic_value(t, bigint(q));
  for (const auto& [r, e] : factor(phi)) {
    bool primitive = true;
    for (std::uint64_t i = 1; i < t && primitive; ++i)
      if (boost::multiprecision::powm(bigint(q), bigint(i), r) == 1) primitive = false;
    if (primitive) out.insert(r);
  }
  return out;
}

bool has_primitive_prime_divisor(std::uint64_t q, std::uint64_t t) {
  prime_power_or_throw(q);
  // Phi_t(q) stripped of the primes dividing t: what remains is a product of ppds.
  bigint rest = cyclotomic_value(t, bigint(q));
  for (std::uint64_t p = 2; p <= t; ++p) {
    if (t % p || !is_prime(p)) continue;
    while (rest % p == 0) rest /= p;
  }
  return rest > 1;
}

bool is_zsigmondy_exception(std::uint64_t q, std::uint64_t t) {
  if (t == 6 && q == 2) return true;
  if (t == 2) {
    std::uint64_t s = q + 1;
    return (s & (s - 1)) == 0;
  }
  return false;
}

bool ppd_bound_check(const bigint& r, std::uint64_t t) {
  if (r % t != 1) return false;
  if (r < t + 1) return false;
  if (t % 2 == 1 && r < 2 * t + 1) return false;
  return true;
}

std::uint64_t bertrand_number(std::uint64_t n) {
  if (n < 5) throw Error(Errc::unsupported_parameters, "Bertrand numbers need n >= 5");
  if (n == 5) return 3;
  if (n == 6) return 4;
  if (n == 7) return 5;
  for (std::uint64_t t = n - 3; 2 * t > n; --t)
    if (is_prime(t)) return t;
  throw Error(Errc::unsupported_parameters, "no prime in (n/2, n-3]");
}

SingerFamily parse_singer_family(const std::string& s) {
  if (s == "GL") return SingerFamily::GL;
  if (s == "SL") return SingerFamily::SL;
  if (s == "GU") return SingerFamily::GU;
  if (s == "SU") return SingerFamily::SU;
  if (s == "Sp") return SingerFamily::Sp;
  if (s == "O-" || s == "Ominus") return SingerFamily::Ominus;
  if (s == "Omega-" || s == "Omegaminus") return SingerFamily::Omegaminus;
  throw Error(Errc::parse_error, "unknown family '" + s + "'");
}

std::string to_string(SingerFamily f) {
  switch (f) {
    case SingerFamily::GL: return "GL";
    case SingerFamily::SL: return "SL";
    case SingerFamily::GU: return "GU";
    case SingerFamily::SU: return "SU";
    case SingerFamily::Sp: return "Sp";
    case SingerFamily::Ominus: return "O-";
    case SingerFamily::Omegaminus: return "Omega-";
  }
  return "?";
}

bigint singer_order(const SingerSpec& s) {
  prime_power_or_throw(s.q);
  const bigint q = s.q;
  const std::uint64_t n = s.n;
  if (n < 1) throw Error(Errc::unsupported_parameters, "dimension must be positive");
  const bool unitary = s.family == SingerFamily::GU || s.family == SingerFamily::SU;
  const bool even = s.family == SingerFamily::Sp || s.family == SingerFamily::Ominus ||
                    s.family == SingerFamily::Omegaminus;
  if (unitary && n % 2 == 0)
    throw Error(Errc::unsupported_parameters, "unitary Singer cycles need odd n");
  if (even && n % 2 == 1)
    throw Error(Errc::unsupported_parameters, to_string(s.family) + " Singer cycles need even n");
  switch (s.family) {
    case SingerFamily::GL: return ipow(q, n) - 1;
    case SingerFamily::SL: return (ipow(q, n) - 1) / (q - 1);
    case SingerFamily::GU: return ipow(q, n) + 1;
    case SingerFamily::SU:
      if (n == 3 && s.q == 2) throw Error(Errc::no_singer_cycle, "SU3(2) has no Singer cycles");
      return (ipow(q, n) + 1) / (q + 1);
    case SingerFamily::Sp:
    case SingerFamily::Ominus: return ipow(q, n / 2) + 1;
    case SingerFamily::Omegaminus:
      if (n == 2 && s.q == 3) throw Error(Errc::no_singer_cycle, "Omega2-(3) has no Singer cycles");
      return (ipow(q, n / 2) + 1) / (s.q % 2 == 1 ? 2 : 1);
  }
  return 0;
}

}  // namespace ncov
