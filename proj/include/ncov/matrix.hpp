#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncov/field.hpp"

namespace ncov {

using Vec = std::vector<FieldCtx::elem>;

// Dense matrix over a finite field. Vectors are rows and act on the right:
// v -> v * g.
class Matrix {
 public:
  using elem = FieldCtx::elem;

  Matrix() = default;
  Matrix(FieldPtr F, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldPtr F, std::size_t n);
  static Matrix scalar(FieldPtr F, std::size_t n, elem c);
  static Matrix from_rows(FieldPtr F, const std::vector<Vec>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::size_t dim() const { return r_; }
  const FieldCtx& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }

  elem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  elem operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);
  const std::vector<elem>& data() const { return a_; }

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  bool operator==(const Matrix& b) const { return r_ == b.r_ && c_ == b.c_ && a_ == b.a_; }
  bool operator!=(const Matrix& b) const { return !(*this == b); }
  bool operator<(const Matrix& b) const { return a_ < b.a_; }

  Matrix scaled(elem c) const;
  Matrix transpose() const;
  // entrywise x -> x^(p^k)
  Matrix frob(std::uint32_t k) const;
  Matrix inverse() const;
  Matrix pow(const bigint& e) const;
  elem det() const;
  std::size_t rank() const;
  bool is_identity() const;
  bool is_zero() const;
  bool is_scalar() const;

  std::string to_string() const;

 private:
  FieldPtr F_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<elem> a_;
};

Vec vec_mul(const Vec& v, const Matrix& m);
Vec vec_add(const FieldCtx& F, const Vec& a, const Vec& b);
Vec vec_sub(const FieldCtx& F, const Vec& a, const Vec& b);
Vec vec_scale(const FieldCtx& F, const Vec& a, FieldCtx::elem c);
bool vec_is_zero(const Vec& v);
// x^T-free bilinear pairing sum a_i b_i
FieldCtx::elem vec_dot(const FieldCtx& F, const Vec& a, const Vec& b);

Matrix block_diag(const Matrix& a, const Matrix& b);
// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
// Basis (as rows) of {x : x * m = 0}.
std::vector<Vec> left_kernel(const Matrix& m);
// Basis of {x : m * x^T = 0}.
std::vector<Vec> right_kernel(const Matrix& m);
Matrix poly_eval(const Poly& p, const Matrix& m);

// Exact multiplicative order of an invertible matrix.
bigint matrix_order(const Matrix& g);
// Minimal polynomial (monic), as the lcm of the minimal polynomials of the
// standard basis vectors.
Poly minimal_polynomial(const Matrix& g);
Poly vector_minimal_polynomial(const Vec& v, const Matrix& g);

}  // namespace ncov
