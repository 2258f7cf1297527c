#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ncov/factor.hpp"

namespace ncov {

// GF(p^f). Elements are integers 0..q-1 holding the base-p digits of a
// polynomial residue modulo the lexicographically smallest irreducible monic
// polynomial of degree f (digits read as an integer, constant term lowest).
class FieldCtx {
 public:
  using elem = std::uint32_t;

  FieldCtx(std::uint32_t p, std::uint32_t f);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  elem primitive() const { return exp_[1]; }

  elem add(elem a, elem b) const;
  elem sub(elem a, elem b) const;
  elem neg(elem a) const;
  elem mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  elem inv(elem a) const;
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  elem pow(elem a, std::uint64_t e) const;
  elem pow(elem a, const bigint& e) const;
  // a^(p^k)
  elem frob(elem a, std::uint32_t k = 1) const;
  std::uint32_t log(elem a) const { return log_[a]; }
  elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  std::uint64_t order(elem a) const;
  bool is_square(elem a) const;
  // the image of the integer k in the prime field
  elem from_int(std::int64_t k) const;
  // x^q0-fixed check for a subfield of order q0
  bool in_subfield(elem a, std::uint32_t q0) const;
  std::string to_string(elem a) const;

 private:
  std::uint32_t p_, f_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;
FieldPtr make_field(std::uint32_t p, std::uint32_t f);
// Field of order q (a prime power).
FieldPtr make_field_q(std::uint64_t q);

// Polynomials over a field, coefficients from the constant term up, no
// trailing zeros (the zero polynomial is empty).
using Poly = std::vector<FieldCtx::elem>;

void poly_trim(Poly& a);
Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& F, const Poly& a, FieldCtx::elem c);
void poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_gcd(const FieldCtx& F, Poly a, Poly b);
Poly poly_monic(const FieldCtx& F, const Poly& a);
Poly poly_deriv(const FieldCtx& F, const Poly& a);
Poly poly_powmod(const FieldCtx& F, const Poly& base, const bigint& e, const Poly& mod);
Poly poly_lcm(const FieldCtx& F, const Poly& a, const Poly& b);
bool poly_is_irreducible(const FieldCtx& F, const Poly& a);
std::string poly_to_string(const FieldCtx& F, const Poly& a);

// Lexicographically smallest monic irreducible polynomial of degree d over F.
Poly smallest_irreducible(const FieldCtx& F, std::uint32_t d);

// The extension F[y]/h(y) with h irreducible of degree k. Elements are
// coefficient vectors of length k.
class ExtField {
 public:
  using elem = std::vector<FieldCtx::elem>;

  ExtField(FieldPtr base, std::uint32_t k);
  ExtField(FieldPtr base, Poly h);

  const FieldCtx& base() const { return *F_; }
  FieldPtr base_ptr() const { return F_; }
  std::uint32_t degree() const { return k_; }
  const Poly& modulus() const { return h_; }
  bigint order() const;  // |K| - 1 as the multiplicative order bound

  elem zero() const { return elem(k_, 0); }
  elem one() const;
  elem constant(FieldCtx::elem c) const;
  elem gen() const;  // the class of y
  bool is_zero(const elem& a) const;
  bool is_constant(const elem& a) const;

  elem add(const elem& a, const elem& b) const;
  elem sub(const elem& a, const elem& b) const;
  elem neg(const elem& a) const;
  elem mul(const elem& a, const elem& b) const;
  elem scale(const elem& a, FieldCtx::elem c) const;
  elem pow(const elem& a, const bigint& e) const;
  elem inv(const elem& a) const;
  // a^(|F|^j)
  elem frob(const elem& a, std::uint32_t j = 1) const;

  // an element of multiplicative order |K| - 1
  elem primitive() const;
  // element with the given integer encoding (base-|F| digits)
  elem from_index(std::uint64_t idx) const;

  // Minimal polynomial of a over the base field (monic).
  Poly minimal_polynomial(const elem& a) const;

 private:
  FieldPtr F_;
  std::uint32_t k_;
  Poly h_;
};

}  // namespace ncov
