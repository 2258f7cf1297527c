#pragma once

#include <optional>
#include <vector>

#include "ncov/matrix.hpp"

namespace ncov {

enum class FormKind { symplectic, hermitian, quadratic };

// Forms on row vectors. Symplectic/hermitian: B(x, y) = x F ybar^T, with bar
// the involution x -> x^sqrt(|F|) for hermitian forms (identity otherwise).
// Quadratic: Q(x) = x U x^T with U upper triangular; polar form U + U^T.
struct FormSpec {
  FormKind kind = FormKind::symplectic;
  Matrix gram;
  int type_epsilon = 0;  // +1 / -1 for even-dimensional quadratic forms
  int witt_defect = -1;  // 0 or 1 for even-dimensional quadratic forms

  // Gram matrix of the associated bilinear (or sesquilinear) form.
  Matrix bilinear() const;
};

FormSpec standard_symplectic(FieldPtr F, std::size_t n);
// F must have square order; the hermitian form is antidiagonal.
FormSpec standard_hermitian(FieldPtr F, std::size_t n);
// eps = +1 / -1 for even n, 0 for odd n (q odd).
FormSpec standard_quadratic(FieldPtr F, std::size_t n, int eps);
// Smallest alpha with T^2 + T + alpha irreducible over F.
FieldCtx::elem anisotropic_constant(const FieldCtx& F);

// x -> x^sqrt(|F|), the involution of a field of square order
FieldCtx::elem hconj(const FieldCtx& F, FieldCtx::elem x);
Matrix hconj(const Matrix& m);

// Folds M_ij + M_ji into the upper triangle.
Matrix upper_fold(const Matrix& m);

FieldCtx::elem quad_value(const Matrix& U, const Vec& v);
FieldCtx::elem form_value(const FormSpec& f, const Vec& u, const Vec& v);

bool preserves(const Matrix& g, const FormSpec& f);
// g preserves the form up to a scalar; returns the scalar (0 if not).
FieldCtx::elem similitude_factor(const Matrix& g, const FormSpec& f);

// Bases of the spaces of forms invariant under every matrix in gens.
std::vector<Matrix> invariant_bilinear_forms(const std::vector<Matrix>& gens);
std::vector<Matrix> invariant_sesquilinear_forms(const std::vector<Matrix>& gens);
std::vector<Matrix> invariant_quadratic_forms(const std::vector<Matrix>& gens);

// A nondegenerate invariant form of the requested kind, if there is one.
std::optional<FormSpec> find_invariant_form(const std::vector<Matrix>& gens, FormKind kind);

// Change of basis P (rows are the new basis) taking the form to the
// standard one: P F Pbar^T = F_std, or upper_fold(P U P^T) = scale * U_std.
// `scale` is 1 except for odd-dimensional quadratic forms with q odd whose
// discriminant is not that of the standard form.
struct Standardization {
  Matrix P;
  FormSpec standard;
  FieldCtx::elem scale = 1;
};
Standardization standardize(const FormSpec& f);

// Witt type of an even-dimensional nondegenerate quadratic form.
int quadratic_type(const Matrix& U);
bool is_nondegenerate(const FormSpec& f);

// Spinor norm (q odd) of g in SO(Q): true when it is a square.
bool spinor_norm_is_square(const Matrix& g, const FormSpec& Q);
// Reflection factorization g = r_{w_1} ... r_{w_k}; returns the vectors.
std::vector<Vec> reflection_factorization(const Matrix& g, const FormSpec& Q);
Matrix reflection(const FormSpec& Q, const Vec& w);
// Membership in Omega(Q): trivial spinor norm and det 1 for q odd, even
// Dickson invariant for q even.
bool in_omega(const Matrix& g, const FormSpec& Q);
bool in_special(const Matrix& g, const FormSpec& Q);

}  // namespace ncov
