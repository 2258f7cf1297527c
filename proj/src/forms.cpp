#include "ncov/forms.hpp"

#include <random>
#include <stdexcept>

#include "ncov/error.hpp"

namespace ncov {

using elem = FieldCtx::elem;

Matrix FormSpec::bilinear() const {
  if (kind != FormKind::quadratic) return gram;
  return gram + gram.transpose();
}

elem hconj(const FieldCtx& F, elem x) {
  if (F.f() % 2) throw Error(Errc::unsupported_parameters, "hermitian forms need a field of square order");
  return F.frob(x, F.f() / 2);
}

Matrix hconj(const Matrix& m) { return m.frob(m.field().f() / 2); }

Matrix upper_fold(const Matrix& m) {
  Matrix r(m.field_ptr(), m.rows(), m.cols());
  const FieldCtx& F = m.field();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    r(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < m.cols(); ++j) r(i, j) = F.add(m(i, j), m(j, i));
  }
  return r;
}

elem anisotropic_constant(const FieldCtx& F) {
  for (elem a = 0; a < F.q(); ++a) {
    bool root = false;
    for (elem t = 0; t < F.q() && !root; ++t)
      if (F.add(F.add(F.mul(t, t), t), a) == 0) root = true;
    if (!root) return a;
  }
  throw std::logic_error("no irreducible T^2+T+a");
}

FormSpec standard_symplectic(FieldPtr F, std::size_t n) {
  if (n % 2) throw Error(Errc::unsupported_parameters, "symplectic forms need even dimension");
  Matrix g(F, n, n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    g(i, n - 1 - i) = 1;
    g(n - 1 - i, i) = F->neg(1);
  }
  return FormSpec{FormKind::symplectic, g, 0, -1};
}

FormSpec standard_hermitian(FieldPtr F, std::size_t n) {
  if (F->f() % 2) throw Error(Errc::unsupported_parameters, "hermitian forms need a field of square order");
  Matrix g(F, n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, n - 1 - i) = 1;
  return FormSpec{FormKind::hermitian, g, 0, -1};
}

FormSpec standard_quadratic(FieldPtr F, std::size_t n, int eps) {
  Matrix U(F, n, n);
  std::size_t m = n / 2;
  FormSpec f{FormKind::quadratic, U, 0, -1};
  if (n % 2 == 1) {
    if (eps != 0) throw Error(Errc::unsupported_parameters, "odd dimension has no Witt type");
    if (F->p() == 2) throw Error(Errc::unsupported_parameters, "odd-dimensional orthogonal groups need q odd");
    for (std::size_t i = 0; i < m; ++i) U(i, n - 1 - i) = 1;
    U(m, m) = 1;
  } else if (eps == 1) {
    for (std::size_t i = 0; i < m; ++i) U(i, n - 1 - i) = 1;
    f.type_epsilon = 1;
    f.witt_defect = 0;
  } else if (eps == -1) {
    if (n == 0) throw Error(Errc::unsupported_parameters, "zero-dimensional minus type");
    for (std::size_t i = 0; i + 1 < m; ++i) U(i, n - 1 - i) = 1;
    U(m - 1, m - 1) = 1;
    U(m - 1, m) = 1;
    U(m, m) = anisotropic_constant(*F);
    f.type_epsilon = -1;
    f.witt_defect = 1;
  } else {
    throw Error(Errc::unsupported_parameters, "even dimension needs a Witt type");
  }
  f.gram = U;
  return f;
}

elem quad_value(const Matrix& U, const Vec& v) {
  const FieldCtx& F = U.field();
  elem s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    for (std::size_t j = i; j < v.size(); ++j) {
      if (!v[j] || !U(i, j)) continue;
      s = F.add(s, F.mul(U(i, j), F.mul(v[i], v[j])));
    }
  }
  return s;
}

elem form_value(const FormSpec& f, const Vec& u, const Vec& v) {
  const FieldCtx& F = f.gram.field();
  Matrix B = f.bilinear();
  Vec uB = vec_mul(u, B);
  if (f.kind == FormKind::hermitian) {
    Vec vb(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) vb[i] = hconj(F, v[i]);
    return vec_dot(F, uB, vb);
  }
  return vec_dot(F, uB, v);
}

bool preserves(const Matrix& g, const FormSpec& f) {
  switch (f.kind) {
    case FormKind::symplectic: return g * f.gram * g.transpose() == f.gram;
    case FormKind::hermitian: return g * f.gram * hconj(g).transpose() == f.gram;
    case FormKind::quadratic: return upper_fold(g * f.gram * g.transpose()) == f.gram;
  }
  return false;
}

elem similitude_factor(const Matrix& g, const FormSpec& f) {
  Matrix img;
  switch (f.kind) {
    case FormKind::symplectic: img = g * f.gram * g.transpose(); break;
    case FormKind::hermitian: img = g * f.gram * hconj(g).transpose(); break;
    case FormKind::quadratic: img = upper_fold(g * f.gram * g.transpose()); break;
  }
  const FieldCtx& F = g.field();
  elem lambda = 0;
  for (std::size_t i = 0; i < img.data().size(); ++i) {
    if (f.gram.data()[i]) {
      lambda = F.div(img.data()[i], f.gram.data()[i]);
      break;
    }
  }
  if (!lambda || img != f.gram.scaled(lambda)) return 0;
  return lambda;
}

namespace {

// Builds the linear system for X with g X h(g)^T = X, h the identity or the
// hermitian involution, and returns a kernel basis as matrices.
std::vector<Matrix> invariant_forms(const std::vector<Matrix>& gens, bool herm) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  FieldPtr F = gens[0].field_ptr();
  std::size_t n = gens[0].rows();
  std::size_t N = n * n;
  Matrix A(F, N * gens.size(), N);
  for (std::size_t t = 0; t < gens.size(); ++t) {
    const Matrix& g = gens[t];
    Matrix gb = herm ? hconj(g) : g;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t row = t * N + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          if (!g(i, k)) continue;
          for (std::size_t l = 0; l < n; ++l) A(row, k * n + l) = F->mul(g(i, k), gb(j, l));
        }
        A(row, i * n + j) = F->sub(A(row, i * n + j), 1);
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : right_kernel(A)) {
    Matrix X(F, n, n);
    for (std::size_t i = 0; i < N; ++i) X(i / n, i % n) = v[i];
    out.push_back(X);
  }
  return out;
}

}  // namespace

std::vector<Matrix> invariant_bilinear_forms(const std::vector<Matrix>& gens) {
  return invariant_forms(gens, false);
}

std::vector<Matrix> invariant_sesquilinear_forms(const std::vector<Matrix>& gens) {
  return invariant_forms(gens, true);
}

std::vector<Matrix> invariant_quadratic_forms(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  FieldPtr F = gens[0].field_ptr();
  std::size_t n = gens[0].rows();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::vector<std::vector<std::size_t>> pos(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      pos[i][j] = idx.size();
      idx.emplace_back(i, j);
    }
  std::size_t N = idx.size();
  Matrix A(F, N * gens.size(), N);
  for (std::size_t t = 0; t < gens.size(); ++t) {
    const Matrix& g = gens[t];
    for (std::size_t e = 0; e < N; ++e) {
      auto [i, j] = idx[e];
      std::size_t row = t * N + e;
      for (std::size_t c = 0; c < N; ++c) {
        auto [k, l] = idx[c];
        elem coef = F->mul(g(i, k), g(j, l));
        if (i != j) coef = F->add(coef, F->mul(g(j, k), g(i, l)));
        A(row, c) = coef;
      }
      A(row, e) = F->sub(A(row, e), 1);
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : right_kernel(A)) {
    Matrix U(F, n, n);
    for (std::size_t c = 0; c < N; ++c) U(idx[c].first, idx[c].second) = v[c];
    out.push_back(U);
  }
  return out;
}

bool is_nondegenerate(const FormSpec& f) {
  std::size_t n = f.gram.rows();
  if (f.kind == FormKind::quadratic && f.gram.field().p() == 2 && n % 2 == 1) return false;
  return f.bilinear().det() != 0;
}

std::optional<FormSpec> find_invariant_form(const std::vector<Matrix>& gens, FormKind kind) {
  std::vector<Matrix> basis;
  if (kind == FormKind::quadratic) basis = invariant_quadratic_forms(gens);
  else if (kind == FormKind::hermitian) basis = invariant_sesquilinear_forms(gens);
  else basis = invariant_bilinear_forms(gens);
  if (basis.empty()) return std::nullopt;
  FieldPtr F = gens[0].field_ptr();
  std::size_t n = gens[0].rows();
  std::mt19937_64 rng(12345);
  auto candidate = [&](std::size_t attempt) {
    Matrix X(F, n, n);
    if (attempt < basis.size()) {
      X = basis[attempt];
    } else {
      for (const auto& b : basis) X = X + b.scaled(elem(rng() % F->q()));
    }
    return X;
  };
  for (std::size_t attempt = 0; attempt < basis.size() + 400; ++attempt) {
    Matrix X = candidate(attempt);
    FormSpec f{kind, X, 0, -1};
    if (kind == FormKind::symplectic) {
      // alternating part: X - X^T is invariant too
      f.gram = X - X.transpose();
      if (F->p() == 2) {
        // X - X^T vanishes when X is already alternating
        bool alt = X == X.transpose();
        for (std::size_t i = 0; i < n && alt; ++i)
          if (X(i, i)) alt = false;
        if (alt) f.gram = X;
      }
    } else if (kind == FormKind::hermitian) {
      elem lam = elem(rng() % F->q());
      if (attempt < basis.size()) lam = 1;
      Matrix Y = X.scaled(lam);
      f.gram = Y + hconj(Y).transpose();
    }
    if (f.gram.is_zero() || !is_nondegenerate(f)) continue;
    if (kind == FormKind::quadratic && n % 2 == 0) {
      f.type_epsilon = quadratic_type(f.gram);
      f.witt_defect = f.type_epsilon == 1 ? 0 : 1;
    }
    return f;
  }
  return std::nullopt;
}

namespace {

// Independent rows spanning the same space.
std::vector<Vec> reduce_span(const FieldPtr& F, const std::vector<Vec>& W, std::size_t n) {
  if (W.empty()) return {};
  Matrix M = Matrix::from_rows(F, W);
  auto piv = rref(M);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(M.row(i));
  (void)n;
  return out;
}

// Projective enumeration of the span of the first s vectors of W; calls pred
// on each candidate until it returns true.
template <class Pred>
std::optional<Vec> search_span(const FieldCtx& F, const std::vector<Vec>& W, std::size_t s, Pred pred) {
  s = std::min(s, W.size());
  std::size_t n = W.empty() ? 0 : W[0].size();
  std::uint64_t q = F.q();
  // leading coefficient 1 at position `lead`, arbitrary after it
  for (std::size_t lead = 0; lead < s; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < s; ++i) count *= q;
    for (std::uint64_t c = 0; c < count; ++c) {
      Vec v = W[lead];
      std::uint64_t x = c;
      for (std::size_t i = lead + 1; i < s; ++i) {
        elem co = elem(x % q);
        x /= q;
        if (co) v = vec_add(F, v, vec_scale(F, W[i], co));
      }
      (void)n;
      if (pred(v)) return v;
    }
  }
  return std::nullopt;
}

elem sqrt_elem(const FieldCtx& F, elem a) {
  if (a == 0) return 0;
  if (F.p() == 2) return F.pow(a, F.q() / 2);
  auto l = F.log(a);
  if (l % 2) throw std::domain_error("not a square");
  return F.exp(l / 2);
}

}  // namespace

Standardization standardize(const FormSpec& f) {
  FieldPtr F = f.gram.field_ptr();
  const FieldCtx& K = *F;
  std::size_t n = f.gram.rows();
  if (!is_nondegenerate(f)) throw Error(Errc::degenerate_form, "form is degenerate");
  std::vector<Vec> W;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    W.push_back(e);
  }
  auto B = [&](const Vec& x, const Vec& y) { return form_value(f, x, y); };
  std::vector<std::pair<Vec, Vec>> pairs;
  Standardization out;

  if (f.kind == FormKind::symplectic) {
    while (!W.empty()) {
      Vec u = W[0];
      Vec v;
      for (const auto& w : W)
        if (B(u, w)) {
          v = w;
          break;
        }
      if (v.empty()) throw Error(Errc::degenerate_form, "form is degenerate");
      v = vec_scale(K, v, K.inv(B(u, v)));
      std::vector<Vec> nw;
      for (const auto& w : W) {
        Vec x = vec_add(K, vec_sub(K, w, vec_scale(K, u, B(w, v))), vec_scale(K, v, B(w, u)));
        if (!vec_is_zero(x)) nw.push_back(x);
      }
      pairs.emplace_back(u, v);
      std::size_t before = W.size();
      W = reduce_span(F, nw, n);
      if (W.size() + 2 != before) throw Error(Errc::degenerate_form, "form is not alternating");
    }
    Matrix P(F, n, n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      P.set_row(i, pairs[i].first);
      P.set_row(n - 1 - i, pairs[i].second);
    }
    out.P = P;
    out.standard = standard_symplectic(F, n);
    return out;
  }

  if (f.kind == FormKind::hermitian) {
    Vec middle;
    while (W.size() >= 2) {
      auto u = search_span(K, W, 2, [&](const Vec& v) { return B(v, v) == 0; });
      if (!u) throw std::logic_error("no isotropic vector in a hermitian plane");
      Vec v;
      for (const auto& w : W)
        if (B(*u, w)) {
          v = w;
          break;
        }
      if (v.empty()) throw Error(Errc::degenerate_form, "form is degenerate");
      v = vec_scale(K, v, hconj(K, K.inv(B(*u, v))));
      elem target = K.neg(B(v, v));
      elem mu = 0;
      for (elem x = 0; x < K.q(); ++x)
        if (K.add(x, hconj(K, x)) == target) {
          mu = x;
          break;
        }
      v = vec_add(K, v, vec_scale(K, *u, mu));
      std::vector<Vec> nw;
      for (const auto& w : W) {
        Vec x = vec_sub(K, vec_sub(K, w, vec_scale(K, *u, B(w, v))), vec_scale(K, v, B(w, *u)));
        if (!vec_is_zero(x)) nw.push_back(x);
      }
      pairs.emplace_back(*u, v);
      W = reduce_span(F, nw, n);
    }
    if (W.size() == 1) {
      Vec w = W[0];
      elem c = K.inv(B(w, w));
      for (elem lam = 1; lam < K.q(); ++lam)
        if (K.mul(lam, hconj(K, lam)) == c) {
          middle = vec_scale(K, w, lam);
          break;
        }
    }
    Matrix P(F, n, n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      P.set_row(i, pairs[i].first);
      P.set_row(n - 1 - i, pairs[i].second);
    }
    if (!middle.empty()) P.set_row(n / 2, middle);
    out.P = P;
    out.standard = standard_hermitian(F, n);
    return out;
  }

  // quadratic
  auto Q = [&](const Vec& x) { return quad_value(f.gram, x); };
  for (;;) {
    if (W.size() < 2) break;
    auto u = search_span(K, W, 3, [&](const Vec& v) { return Q(v) == 0; });
    if (!u) break;
    Vec v;
    for (const auto& w : W)
      if (B(*u, w)) {
        v = w;
        break;
      }
    if (v.empty()) throw Error(Errc::degenerate_form, "form is degenerate");
    v = vec_scale(K, v, K.inv(B(*u, v)));
    v = vec_sub(K, v, vec_scale(K, *u, Q(v)));
    std::vector<Vec> nw;
    for (const auto& w : W) {
      Vec x = vec_sub(K, vec_sub(K, w, vec_scale(K, *u, B(w, v))), vec_scale(K, v, B(w, *u)));
      if (!vec_is_zero(x)) nw.push_back(x);
    }
    pairs.emplace_back(*u, v);
    W = reduce_span(F, nw, n);
  }
  Matrix P(F, n, n);
  elem scale = 1;
  if (W.empty()) {
    out.standard = standard_quadratic(F, n, 1);
  } else if (W.size() == 2) {
    out.standard = standard_quadratic(F, n, -1);
    elem alpha = anisotropic_constant(K);
    std::size_t m = n / 2;
    bool done = false;
    // x with Q(x) = 1, then y with B(x, y) = 1 and Q(y) = alpha
    std::vector<Vec> span;
    for (elem a = 0; a < K.q(); ++a)
      for (elem b = 0; b < K.q(); ++b)
        span.push_back(vec_add(K, vec_scale(K, W[0], a), vec_scale(K, W[1], b)));
    for (const auto& x : span) {
      if (Q(x) != 1) continue;
      for (const auto& y : span) {
        if (B(x, y) == 1 && Q(y) == alpha) {
          P.set_row(m - 1, x);
          P.set_row(m, y);
          done = true;
          break;
        }
      }
      if (done) break;
    }
    if (!done) throw std::logic_error("anisotropic plane not standardized");
  } else if (W.size() == 1) {
    out.standard = standard_quadratic(F, n, 0);
    Vec w = W[0];
    elem c = Q(w);
    if (K.is_square(c)) {
      P.set_row(n / 2, vec_scale(K, w, sqrt_elem(K, K.inv(c))));
    } else {
      scale = c;
      P.set_row(n / 2, w);
    }
  } else {
    throw Error(Errc::degenerate_form, "form is degenerate");
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    P.set_row(i, pairs[i].first);
    P.set_row(n - 1 - i, vec_scale(K, pairs[i].second, scale));
  }
  out.P = P;
  out.scale = scale;
  return out;
}

int quadratic_type(const Matrix& U) {
  FormSpec f{FormKind::quadratic, U, 0, -1};
  return standardize(f).standard.type_epsilon;
}

Matrix reflection(const FormSpec& Q, const Vec& w) {
  const FieldCtx& F = Q.gram.field();
  elem qw = quad_value(Q.gram, w);
  if (!qw) throw std::domain_error("reflection in a singular vector");
  std::size_t n = w.size();
  Matrix Bm = Q.bilinear();
  Vec Bw = vec_mul(w, Bm.transpose());  // (B w^T)_i = B(e_i, w)
  Matrix r = Matrix::identity(Q.gram.field_ptr(), n);
  elem inv = F.inv(qw);
  for (std::size_t i = 0; i < n; ++i) {
    elem c = F.mul(Bw[i], inv);
    if (!c) continue;
    for (std::size_t j = 0; j < n; ++j) r(i, j) = F.sub(r(i, j), F.mul(c, w[j]));
  }
  return r;
}

std::vector<Vec> reflection_factorization(const Matrix& g, const FormSpec& Q) {
  if (Q.kind != FormKind::quadratic) throw Error(Errc::not_orthogonal, "not a quadratic form");
  if (!is_nondegenerate(Q)) throw Error(Errc::degenerate_form, "form is degenerate");
  if (!preserves(g, Q)) throw Error(Errc::not_orthogonal, "matrix does not preserve the form");
  const FieldCtx& F = g.field();
  std::size_t n = g.rows();
  std::mt19937_64 rng(987654321);
  Matrix h = g;
  std::vector<Vec> ws;
  auto random_vec = [&]() {
    Vec v(n);
    for (auto& x : v) x = elem(rng() % F.q());
    return v;
  };
  if (F.p() != 2) {
    // Work inside a nondegenerate h-stable subspace W; each round fixes one
    // more nonsingular vector v and passes to W cap v^perp.
    std::vector<Vec> W;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      W.push_back(e);
    }
    Matrix Bm = Q.bilinear();
    auto bil = [&](const Vec& x, const Vec& y) { return vec_dot(F, vec_mul(x, Bm), y); };
    auto random_in = [&]() {
      Vec v(n, 0);
      for (const auto& b : W) v = vec_add(F, v, vec_scale(F, b, elem(rng() % F.q())));
      return v;
    };
    auto apply = [&](const Vec& w) {
      h = h * reflection(Q, w);
      ws.push_back(w);
    };
    int spare = 0;
    while (!W.empty() && !h.is_identity()) {
      std::optional<Vec> fixed;
      for (int t = 0; t < 400 && !fixed; ++t) {
        Vec v = random_in();
        if (!quad_value(Q.gram, v)) continue;
        Vec w = vec_sub(F, v, vec_mul(v, h));
        if (vec_is_zero(w)) {
          fixed = v;
        } else if (quad_value(Q.gram, w)) {
          apply(w);
          fixed = v;
        }
      }
      if (!fixed) {
        // exceptional case: every difference is singular
        if (++spare > 4 * int(n)) throw std::logic_error("reflection factorization stalled");
        for (int t = 0; t < 400; ++t) {
          Vec a = random_in();
          if (quad_value(Q.gram, a)) {
            apply(a);
            break;
          }
        }
        continue;
      }
      elem inv = F.inv(bil(*fixed, *fixed));
      std::vector<Vec> nw;
      for (const auto& b : W) {
        Vec x = vec_sub(F, b, vec_scale(F, *fixed, F.mul(bil(b, *fixed), inv)));
        if (!vec_is_zero(x)) nw.push_back(x);
      }
      W = reduce_span(g.field_ptr(), nw, n);
    }
    if (!h.is_identity()) throw std::logic_error("reflection factorization did not terminate");
    std::reverse(ws.begin(), ws.end());
    return ws;
  }
  for (std::size_t iter = 0; iter < 8 * n + 16 && !h.is_identity(); ++iter) {
    std::optional<Vec> found;
    for (std::size_t i = 0; i < n && !found; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      Vec w = vec_sub(F, e, vec_mul(e, h));
      if (!vec_is_zero(w) && quad_value(Q.gram, w)) found = w;
    }
    for (int t = 0; t < 200 && !found; ++t) {
      Vec x = random_vec();
      Vec w = vec_sub(F, x, vec_mul(x, h));
      if (!vec_is_zero(w) && quad_value(Q.gram, w)) found = w;
    }
    if (!found) {
      // Im(h - I) is totally singular: step off it with any nonsingular reflection
      for (int t = 0; t < 400 && !found; ++t) {
        Vec w = random_vec();
        if (!vec_is_zero(w) && quad_value(Q.gram, w)) found = w;
      }
      if (!found) throw std::logic_error("reflection factorization stalled");
    }
    h = h * reflection(Q, *found);
    ws.push_back(*found);
  }
  if (!h.is_identity()) throw std::logic_error("reflection factorization did not terminate");
  // g r_1 ... r_k = I, so g = r_k ... r_1
  std::reverse(ws.begin(), ws.end());
  return ws;
}

bool spinor_norm_is_square(const Matrix& g, const FormSpec& Q) {
  const FieldCtx& F = g.field();
  if (F.p() == 2) throw Error(Errc::unsupported_parameters, "spinor norm needs q odd");
  elem theta = 1;
  for (const auto& w : reflection_factorization(g, Q)) theta = F.mul(theta, quad_value(Q.gram, w));
  return F.is_square(theta);
}

bool in_special(const Matrix& g, const FormSpec& /*Q*/) {
  if (g.field().p() == 2) return true;
  return g.det() == 1;
}

bool in_omega(const Matrix& g, const FormSpec& Q) {
  if (Q.kind != FormKind::quadratic) throw Error(Errc::not_orthogonal, "not a quadratic form");
  if (!is_nondegenerate(Q)) throw Error(Errc::degenerate_form, "form is degenerate");
  if (!preserves(g, Q)) throw Error(Errc::not_orthogonal, "matrix does not preserve the form");
  const FieldCtx& F = g.field();
  if (F.p() == 2) {
    Matrix D = g - Matrix::identity(g.field_ptr(), g.rows());
    return D.rank() % 2 == 0;
  }
  return g.det() == 1 && spinor_norm_is_square(g, Q);
}

}  // namespace ncov
