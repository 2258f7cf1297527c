#include "ncov/factor.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace ncov {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Montgomery arithmetic modulo an odd N < 2^127.
class Mont128 {
 public:
  explicit Mont128(u128 n) : n_(n) {
    u128 inv = 1;  // n^-1 mod 2^128 by Newton iteration
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    ninv_ = -inv;
    u128 r = (~static_cast<u128>(0)) % n + 1;  // 2^128 mod n
    r1_ = r % n;
    r2_ = mul_plain(r1_, r1_);
  }
  u128 n() const { return n_; }
  u128 one() const { return r1_; }
  u128 to(u128 a) const { return mul(a % n_, r2_); }
  u128 from(u128 a) const { return redc(0, a); }
  u128 add(u128 a, u128 b) const {
    u128 s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + n_ - b; }
  u128 mul(u128 a, u128 b) const {
    u128 hi, lo;
    wide(a, b, hi, lo);
    return redc(hi, lo);
  }

 private:
  static void wide(u128 a, u128 b, u128& hi, u128& lo) {
    const u128 m64 = ~static_cast<u64>(0);
    u128 a0 = a & m64, a1 = a >> 64, b0 = b & m64, b1 = b >> 64;
    u128 p00 = a0 * b0, p01 = a0 * b1, p10 = a1 * b0, p11 = a1 * b1;
    u128 mid = (p00 >> 64) + (p01 & m64) + (p10 & m64);
    lo = (p00 & m64) | (mid << 64);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  }
  u128 redc(u128 hi, u128 lo) const {
    u128 m = lo * ninv_;
    u128 mh, ml;
    wide(m, n_, mh, ml);
    // lo + ml is 0 mod 2^128, so it carries exactly when lo != 0
    u128 r = hi + mh + (lo != 0 ? 1 : 0);
    return r >= n_ ? r - n_ : r;
  }
  u128 mul_plain(u128 a, u128 b) const {
    // (a*b) mod n by doubling, used once at setup
    u128 r = 0;
    a %= n_;
    while (b) {
      if (b & 1) r = add(r, a);
      a = add(a, a);
      b >>= 1;
    }
    return r;
  }

  u128 n_, ninv_, r1_, r2_;
};

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 powmod_m(const Mont128& M, u128 a, u128 e) {
  u128 r = M.one();
  while (e) {
    if (e & 1) r = M.mul(r, a);
    a = M.mul(a, a);
    e >>= 1;
  }
  return r;
}

bool is_prime128(u128 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    if (n % p == 0) return n == p;
  }
  if (n >> 64 == 0) return is_prime(static_cast<u64>(n));
  Mont128 M(n);
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Fixed small bases plus pseudo-random ones; no known composite passes all.
  std::vector<u64> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  std::mt19937_64 rng(static_cast<u64>(n) ^ 0x9e3779b97f4a7c15ull);
  for (int i = 0; i < 12; ++i) bases.push_back(rng() | 1);
  u128 one = M.one(), minus_one = M.sub(0, one);
  for (u64 b : bases) {
    u128 x = powmod_m(M, M.to(b), d);
    if (x == one || x == minus_one) continue;
    bool ok = false;
    for (int r = 1; r < s && !ok; ++r) {
      x = M.mul(x, x);
      if (x == minus_one) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

u64 rho64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::size_t r = 1;
    auto f = [&](u64 v) { return (mulmod64(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::size_t i = 0; i < std::min<std::size_t>(128, r - k); ++i) {
          y = f(y);
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += 128;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Montgomery-curve ECM, stage 1 plus a standard prime-pairing stage 2.
struct Pt {
  u128 x, z;
};

Pt xdbl(const Mont128& M, Pt p, u128 a24) {
  u128 s = M.add(p.x, p.z), d = M.sub(p.x, p.z);
  u128 s2 = M.mul(s, s), d2 = M.mul(d, d), t = M.sub(s2, d2);
  return {M.mul(s2, d2), M.mul(t, M.add(d2, M.mul(a24, t)))};
}

Pt xadd(const Mont128& M, Pt p, Pt q, Pt diff) {
  u128 u = M.mul(M.sub(p.x, p.z), M.add(q.x, q.z));
  u128 v = M.mul(M.add(p.x, p.z), M.sub(q.x, q.z));
  u128 s = M.add(u, v), d = M.sub(u, v);
  return {M.mul(diff.z, M.mul(s, s)), M.mul(diff.x, M.mul(d, d))};
}

Pt ladder(const Mont128& M, Pt p, u64 k, u128 a24) {
  Pt r0 = p, r1 = xdbl(M, p, a24);
  int top = 63;
  while (top > 0 && !((k >> top) & 1)) --top;
  for (int i = top - 1; i >= 0; --i) {
    if ((k >> i) & 1) {
      r0 = xadd(M, r1, r0, p);
      r1 = xdbl(M, r1, a24);
    } else {
      r1 = xadd(M, r1, r0, p);
      r0 = xdbl(M, r0, a24);
    }
  }
  return r0;
}

std::vector<u64> small_primes(u64 limit) {
  std::vector<char> sieve(limit + 1, 1);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) sieve[j] = 0;
  }
  return out;
}

u128 inv_mod(u128 a, u128 m) {
  // extended Euclid on signed pairs via bigint to stay simple
  bigint r0 = 0, r1 = 0;
  {
    bigint aa = 0, mm = 0;
    aa = static_cast<u64>(a >> 64);
    aa <<= 64;
    aa += static_cast<u64>(a);
    mm = static_cast<u64>(m >> 64);
    mm <<= 64;
    mm += static_cast<u64>(m);
    bigint old_r = aa, r = mm, old_s = 1, s = 0;
    while (r != 0) {
      bigint qt = old_r / r;
      bigint t = old_r - qt * r;
      old_r = r;
      r = t;
      t = old_s - qt * s;
      old_s = s;
      s = t;
    }
    if (old_r != 1) return 0;
    old_s %= mm;
    if (old_s < 0) old_s += mm;
    r0 = old_s;
  }
  u128 hi = static_cast<u64>(r0 >> 64), lo = static_cast<u64>(r0 & bigint(~static_cast<u64>(0)));
  return (hi << 64) | lo;
}

u128 ecm(u128 n, std::mt19937_64& rng) {
  static const std::vector<u64> primes = small_primes(1000000);
  const Mont128 M(n);
  for (int curve = 0; curve < 2000; ++curve) {
    const u64 B1 = curve < 20 ? 2000 : (curve < 100 ? 11000 : 50000);
    const u64 B2 = 100 * B1;
    // Suyama parametrization
    u128 sigma = 6 + rng() % 1000000007ull;
    u128 s = M.to(sigma);
    u128 u = M.sub(M.mul(s, s), M.to(5)), v = M.mul(M.to(4), s);
    u128 u3 = M.mul(M.mul(u, u), u), v3 = M.mul(M.mul(v, v), v);
    u128 den = M.mul(M.mul(M.to(16), u3), v);
    u128 vmu = M.sub(v, u);
    u128 num = M.mul(M.mul(M.mul(vmu, vmu), vmu), M.add(M.mul(M.to(3), u), v));
    u128 den_plain = M.from(den);
    u128 g = gcd128(den_plain, n);
    if (g != 1) {
      if (g != n) return g;
      continue;
    }
    u128 a24 = M.mul(num, M.to(inv_mod(den_plain, n)));
    Pt P{u3, v3};
    for (u64 p : primes) {
      if (p > B1) break;
      u64 pk = p;
      while (pk <= B1 / p) pk *= p;
      P = ladder(M, P, pk, a24);
    }
    g = gcd128(M.from(P.z), n);
    if (g == n) continue;
    if (g != 1) return g;
    // stage 2: p = kD +- j
    const u64 D = 2310;
    std::vector<Pt> baby(D / 2 + 1);
    Pt P2 = xdbl(M, P, a24);
    baby[1] = P;
    Pt prev = P, cur = ladder(M, P, 3, a24);
    for (u64 j = 3; j <= D / 2; j += 2) {
      baby[j] = cur;
      Pt next = xadd(M, cur, P2, prev);
      prev = cur;
      cur = next;
    }
    Pt PD = ladder(M, P, D, a24);
    u64 k = B1 / D;
    Pt G = ladder(M, P, k * D == 0 ? D : k * D, a24);
    if (k == 0) k = 1;
    Pt Gprev = ladder(M, P, (k - 1) * D == 0 ? D : (k - 1) * D, a24);
    bool have_prev = k > 1;
    u128 acc = M.one();
    auto pit = std::upper_bound(primes.begin(), primes.end(), B1);
    for (; k * D <= B2 + D; ++k) {
      u64 lo = k * D - D / 2, hi = k * D + D / 2;
      for (; pit != primes.end() && *pit <= hi && *pit <= B2; ++pit) {
        if (*pit < lo) continue;
        u64 j = *pit > k * D ? *pit - k * D : k * D - *pit;
        if (j == 0 || j % 2 == 0) continue;
        acc = M.mul(acc, M.sub(M.mul(G.x, baby[j].z), M.mul(baby[j].x, G.z)));
      }
      Pt Gn = have_prev ? xadd(M, G, PD, Gprev) : ladder(M, P, (k + 1) * D, a24);
      Gprev = G;
      G = Gn;
      have_prev = true;
      if (pit == primes.end() || *pit > B2) break;
    }
    g = gcd128(M.from(acc), n);
    if (g != 1 && g != n) return g;
  }
  return 0;
}

bigint to_big(u128 v) {
  bigint r = static_cast<u64>(v >> 64);
  r <<= 64;
  r += static_cast<u64>(v);
  return r;
}

void factor128(u128 n, std::map<bigint, int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime128(n)) {
    ++out[to_big(n)];
    return;
  }
  u128 d;
  if (n >> 64 == 0) {
    d = rho64(static_cast<u64>(n));
  } else {
    d = ecm(n, rng);
    if (d == 0) throw std::runtime_error("factorization failed");
  }
  factor128(d, out, rng);
  factor128(n / d, out, rng);
}

bigint rho_big(const bigint& n) {
  for (bigint c = 1;; ++c) {
    bigint x = 2, y = 2, g = 1;
    while (g == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      g = boost::multiprecision::gcd(x > y ? bigint(x - y) : bigint(y - x), n);
    }
    if (g != n) return g;
  }
}

void factor_big(const bigint& n, std::map<bigint, int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (n < (bigint(1) << 126)) {
    u128 v = (static_cast<u128>(static_cast<u64>(n >> 64)) << 64) |
             static_cast<u64>(n & bigint(~static_cast<u64>(0)));
    factor128(v, out, rng);
    return;
  }
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  bigint d = rho_big(n);
  factor_big(d, out, rng);
  factor_big(n / d, out, rng);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for all 64-bit n
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool ok = false;
    for (int r = 1; r < s && !ok; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

bool is_probable_prime(const bigint& n) {
  if (n < 2) return false;
  if (n <= ~static_cast<u64>(0)) return is_prime(static_cast<u64>(n));
  return boost::multiprecision::miller_rabin_test(n, 40);
}

std::map<bigint, int> factor(const bigint& n) {
  std::map<bigint, int> out;
  if (n <= 1) return out;
  bigint m = n;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    while (m % p == 0) {
      ++out[p];
      m /= p;
    }
  }
  std::mt19937_64 rng(12345);
  factor_big(m, out, rng);
  return out;
}

std::map<std::uint64_t, int> factor_u64(std::uint64_t n) {
  std::map<std::uint64_t, int> out;
  for (auto& [p, e] : factor(bigint(n))) out[static_cast<u64>(p)] = e;
  return out;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factor_u64(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f.begin()->first, f.begin()->second);
}

bigint ipow(const bigint& b, std::uint64_t e) {
  bigint r = 1, x = b;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace ncov
