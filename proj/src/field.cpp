#include "ncov/field.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <mutex>
#include <sstream>

#include "ncov/error.hpp"

namespace ncov {

namespace {

// Arithmetic on polynomials over the prime field, used only while the field
// tables are being set up.
using IPoly = std::vector<std::uint32_t>;

IPoly ipoly_mulmod(const IPoly& a, const IPoly& b, const IPoly& m, std::uint32_t p) {
  std::size_t d = m.size() - 1;
  std::vector<std::uint64_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  for (std::size_t i = r.size(); i-- > d;) {
    std::uint64_t c = r[i];
    if (!c) continue;
    // m is monic
    for (std::size_t j = 0; j <= d; ++j) r[i - d + j] = (r[i - d + j] + (p - c) * m[j]) % p;
  }
  IPoly out(d, 0);
  for (std::size_t i = 0; i < d && i < r.size(); ++i) out[i] = std::uint32_t(r[i]);
  return out;
}

std::uint64_t encode(const IPoly& a, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

IPoly decode(std::uint64_t v, std::uint32_t p, std::size_t d) {
  IPoly a(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    a[i] = std::uint32_t(v % p);
    v /= p;
  }
  return a;
}

// Irreducibility over F_p by trial division with all monic polynomials of
// degree at most d/2 (degrees here are tiny).
bool ipoly_irreducible(const IPoly& m, std::uint32_t p) {
  std::size_t d = m.size() - 1;
  if (d == 1) return true;
  for (std::size_t e = 1; e <= d / 2; ++e) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      IPoly g = decode(c, p, e);
      g.push_back(1);
      // remainder of m modulo g
      std::vector<std::int64_t> r(m.begin(), m.end());
      for (std::size_t i = r.size(); i-- > e;) {
        std::int64_t co = r[i] % p;
        if (!co) continue;
        for (std::size_t j = 0; j <= e; ++j) r[i - e + j] = ((r[i - e + j] - co * g[j]) % p + p) % p;
      }
      bool zero = true;
      for (std::size_t i = 0; i < e; ++i)
        if (r[i] % p) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t f) : p_(p), f_(f) {
  if (p < 2 || !is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (f < 1) throw Error(Errc::unsupported_parameters, "field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > (1u << 24)) throw Error(Errc::unsupported_parameters, "field too large");
  }
  q_ = std::uint32_t(q);
  // smallest irreducible monic modulus: integers in increasing order encode
  // the lower coefficients
  for (std::uint64_t c = 0;; ++c) {
    IPoly m = decode(c, p, f);
    m.push_back(1);
    if (f > 1 && m[0] == 0) continue;
    if (ipoly_irreducible(m, p)) {
      modulus_ = m;
      break;
    }
  }
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = 1;
    exp_[1] = 1;
    log_[1] = 0;
    return;
  }
  for (std::uint64_t gg = 2; gg < q_; ++gg) {
    IPoly gp = decode(gg, p, f);
    IPoly cur = decode(1, p, f);
    std::vector<char> seen(q_, 0);
    bool ok = true;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      std::uint64_t code = encode(cur, p);
      if (seen[code]) {
        ok = false;
        break;
      }
      seen[code] = 1;
      exp_[k] = elem(code);
      log_[code] = k;
      cur = ipoly_mulmod(cur, gp, modulus_, p);
    }
    if (ok && encode(cur, p) == 1) break;
  }
  // exp_ has period q-1; keep exp_[q-1] = 1 for convenience
  exp_[q_ - 1] = 1;
}

FieldCtx::elem FieldCtx::add(elem a, elem b) const {
  if (p_ == 2) return a ^ b;
  if (f_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  elem r = 0, mult = 1;
  while (a || b) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

FieldCtx::elem FieldCtx::neg(elem a) const {
  if (p_ == 2) return a;
  if (f_ == 1) return a ? p_ - a : 0;
  elem r = 0, mult = 1;
  while (a) {
    std::uint32_t d = a % p_;
    r += (d ? p_ - d : 0) * mult;
    mult *= p_;
    a /= p_;
  }
  return r;
}

FieldCtx::elem FieldCtx::sub(elem a, elem b) const { return add(a, neg(b)); }

FieldCtx::elem FieldCtx::inv(elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldCtx::elem FieldCtx::pow(elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FieldCtx::elem FieldCtx::pow(elem a, const bigint& e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(e % (q_ - 1));
  return exp_[(std::uint64_t(log_[a]) * r) % (q_ - 1)];
}

FieldCtx::elem FieldCtx::frob(elem a, std::uint32_t k) const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < k % f_; ++i) e *= p_;
  return pow(a, e);
}

std::uint64_t FieldCtx::order(elem a) const {
  if (a == 0) throw std::domain_error("order of zero");
  std::uint64_t n = q_ - 1;
  std::uint64_t g = std::gcd<std::uint64_t>(log_[a], n);
  return n / g;
}

bool FieldCtx::is_square(elem a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

FieldCtx::elem FieldCtx::from_int(std::int64_t k) const {
  std::int64_t r = k % std::int64_t(p_);
  if (r < 0) r += p_;
  return elem(r);
}

bool FieldCtx::in_subfield(elem a, std::uint32_t q0) const { return pow(a, q0) == a; }

std::string FieldCtx::to_string(elem a) const { return std::to_string(a); }

FieldPtr make_field(std::uint32_t p, std::uint32_t f) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, f);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto F = std::make_shared<const FieldCtx>(p, f);
  cache[key] = F;
  return F;
}

FieldPtr make_field_q(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
  return make_field(std::uint32_t(pp->first), std::uint32_t(pp->second));
}

// ---- polynomials over F ----

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(r);
  return r;
}

Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(r);
  return r;
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  poly_trim(r);
  return r;
}

Poly poly_scale(const FieldCtx& F, const Poly& a, FieldCtx::elem c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  poly_trim(r);
  return r;
}

void poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  poly_trim(rem);
  quo.clear();
  if (rem.size() < b.size()) return;
  quo.assign(rem.size() - b.size() + 1, 0);
  auto lead_inv = F.inv(b.back());
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    auto c = F.mul(rem[i], lead_inv);
    if (c) {
      std::size_t shift = i - (b.size() - 1);
      quo[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b[j]));
    }
    if (i == 0) break;
  }
  poly_trim(rem);
  poly_trim(quo);
}

Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(F, a, b, q, r);
  return r;
}

Poly poly_monic(const FieldCtx& F, const Poly& a) {
  if (a.empty()) return a;
  return poly_scale(F, a, F.inv(a.back()));
}

Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_lcm(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly g = poly_gcd(F, a, b);
  Poly q, r;
  poly_divmod(F, poly_mul(F, a, b), g, q, r);
  return poly_monic(F, q);
}

Poly poly_deriv(const FieldCtx& F, const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(F.from_int(std::int64_t(i % F.p())), a[i]));
  poly_trim(r);
  return r;
}

Poly poly_powmod(const FieldCtx& F, const Poly& base, const bigint& e, const Poly& mod) {
  Poly result{1};
  result = poly_mod(F, result, mod);
  Poly b = poly_mod(F, base, mod);
  bigint k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = poly_mod(F, poly_mul(F, result, b), mod);
    k >>= 1;
    if (k > 0) b = poly_mod(F, poly_mul(F, b, b), mod);
  }
  return result;
}

bool poly_is_irreducible(const FieldCtx& F, const Poly& a) {
  Poly m = poly_monic(F, a);
  std::size_t d = m.size() - 1;
  if (m.size() < 2) return false;
  if (d == 1) return true;
  Poly x{0, 1};
  Poly xp = x;
  for (std::size_t i = 1; i <= d / 2; ++i) {
    xp = poly_powmod(F, xp, F.q(), m);
    Poly g = poly_gcd(F, m, poly_sub(F, xp, x));
    if (g.size() != 1) return false;
  }
  return true;
}

std::string poly_to_string(const FieldCtx& F, const Poly& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ' ';
    os << F.to_string(a[i]);
  }
  return os.str();
}

Poly smallest_irreducible(const FieldCtx& F, std::uint32_t d) {
  if (d == 1) return Poly{0, 1};
  std::uint64_t q = F.q();
  for (std::uint64_t c = 1;; ++c) {
    Poly m(d + 1, 0);
    std::uint64_t v = c;
    for (std::uint32_t i = 0; i < d; ++i) {
      m[i] = FieldCtx::elem(v % q);
      v /= q;
    }
    if (v) throw Error(Errc::unsupported_parameters, "no irreducible polynomial found");
    m[d] = 1;
    if (m[0] == 0) continue;
    if (poly_is_irreducible(F, m)) return m;
  }
}

// ---- extension fields ----

ExtField::ExtField(FieldPtr base, std::uint32_t k) : F_(std::move(base)), k_(k) {
  h_ = smallest_irreducible(*F_, k);
}

ExtField::ExtField(FieldPtr base, Poly h) : F_(std::move(base)), h_(std::move(h)) {
  h_ = poly_monic(*F_, h_);
  k_ = std::uint32_t(h_.size() - 1);
}

bigint ExtField::order() const { return ipow(bigint(F_->q()), k_) - 1; }

ExtField::elem ExtField::one() const { return constant(1); }

ExtField::elem ExtField::constant(FieldCtx::elem c) const {
  elem r(k_, 0);
  r[0] = c;
  return r;
}

ExtField::elem ExtField::gen() const {
  if (k_ == 1) {
    // y = -h_0
    return constant(F_->neg(h_[0]));
  }
  elem r(k_, 0);
  r[1] = 1;
  return r;
}

bool ExtField::is_zero(const elem& a) const {
  return std::all_of(a.begin(), a.end(), [](auto c) { return c == 0; });
}

bool ExtField::is_constant(const elem& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

ExtField::elem ExtField::add(const elem& a, const elem& b) const {
  elem r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = F_->add(a[i], b[i]);
  return r;
}

ExtField::elem ExtField::sub(const elem& a, const elem& b) const {
  elem r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = F_->sub(a[i], b[i]);
  return r;
}

ExtField::elem ExtField::neg(const elem& a) const {
  elem r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = F_->neg(a[i]);
  return r;
}

ExtField::elem ExtField::scale(const elem& a, FieldCtx::elem c) const {
  elem r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = F_->mul(a[i], c);
  return r;
}

ExtField::elem ExtField::mul(const elem& a, const elem& b) const {
  Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  poly_trim(pa);
  poly_trim(pb);
  Poly r = poly_mod(*F_, poly_mul(*F_, pa, pb), h_);
  elem out(k_, 0);
  std::copy(r.begin(), r.end(), out.begin());
  return out;
}

ExtField::elem ExtField::pow(const elem& a, const bigint& e) const {
  elem result = one();
  elem b = a;
  bigint k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = mul(result, b);
    k >>= 1;
    if (k > 0) b = mul(b, b);
  }
  return result;
}

ExtField::elem ExtField::inv(const elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  return pow(a, order() - 1);
}

ExtField::elem ExtField::frob(const elem& a, std::uint32_t j) const {
  elem r = a;
  for (std::uint32_t i = 0; i < j % k_; ++i) r = pow(r, F_->q());
  return r;
}

ExtField::elem ExtField::from_index(std::uint64_t idx) const {
  elem r(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    r[i] = FieldCtx::elem(idx % F_->q());
    idx /= F_->q();
  }
  return r;
}

ExtField::elem ExtField::primitive() const {
  bigint n = order();
  auto fac = factor(n);
  bigint count = n + 1;
  for (std::uint64_t idx = 1;; ++idx) {
    if (bigint(idx) >= count) throw Error(Errc::unsupported_parameters, "no primitive element");
    elem a = from_index(idx);
    if (is_zero(a)) continue;
    bool ok = true;
    for (const auto& [r, e] : fac) {
      if (pow(a, n / r) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
}

Poly ExtField::minimal_polynomial(const elem& a) const {
  // product of (Y - a^{q^i}) over the distinct conjugates; coefficients lie
  // in the base field
  std::vector<elem> conj{a};
  for (;;) {
    elem nxt = pow(conj.back(), F_->q());
    if (nxt == a) break;
    conj.push_back(nxt);
  }
  std::vector<elem> poly{one()};
  for (const auto& c : conj) {
    std::vector<elem> next(poly.size() + 1, zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = add(next[i + 1], poly[i]);
      next[i] = sub(next[i], mul(poly[i], c));
    }
    poly = std::move(next);
  }
  Poly out;
  for (const auto& c : poly) {
    if (!is_constant(c)) throw std::logic_error("minimal polynomial not over the base field");
    out.push_back(c[0]);
  }
  poly_trim(out);
  return out;
}

}  // namespace ncov
