#include "ncov/matrix.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ncov/error.hpp"

namespace ncov {

Matrix::Matrix(FieldPtr F, std::size_t rows, std::size_t cols)
    : F_(std::move(F)), r_(rows), c_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr F, std::size_t n) { return scalar(std::move(F), n, 1); }

Matrix Matrix::scalar(FieldPtr F, std::size_t n, elem c) {
  Matrix m(std::move(F), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::from_rows(FieldPtr F, const std::vector<Vec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(std::move(F), rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

void Matrix::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < c_; ++j) a_[i * c_ + j] = v[j];
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (c_ != b.r_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix r(F_, r_, b.c_);
  const FieldCtx& F = *F_;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      elem x = a_[i * c_ + k];
      if (!x) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        elem y = b.a_[k * b.c_ + j];
        if (y) r.a_[i * b.c_ + j] = F.add(r.a_[i * b.c_ + j], F.mul(x, y));
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& b) const {
  Matrix r(F_, r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], b.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
  Matrix r(F_, r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], b.a_[i]);
  return r;
}

Matrix Matrix::scaled(elem c) const {
  Matrix r(F_, r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], c);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(F_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::frob(std::uint32_t k) const {
  Matrix r(F_, r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->frob(a_[i], k);
  return r;
}

std::vector<std::size_t> rref(Matrix& m) {
  const FieldCtx& F = m.field();
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    auto inv = F.inv(m(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      auto c = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(c, m(row, j)));
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

std::size_t Matrix::rank() const {
  Matrix t = *this;
  return rref(t).size();
}

Matrix Matrix::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix aug(F_, r_, 2 * r_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < r_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, r_ + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < r_ || piv[r_ - 1] >= r_) throw std::domain_error("singular matrix");
  Matrix inv(F_, r_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < r_; ++j) inv(i, j) = aug(i, r_ + j);
  return inv;
}

Matrix::elem Matrix::det() const {
  Matrix t = *this;
  const FieldCtx& F = *F_;
  elem d = 1;
  for (std::size_t col = 0; col < r_; ++col) {
    std::size_t sel = col;
    while (sel < r_ && t(sel, col) == 0) ++sel;
    if (sel == r_) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < r_; ++j) std::swap(t(sel, j), t(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, t(col, col));
    auto inv = F.inv(t(col, col));
    for (std::size_t i = col + 1; i < r_; ++i) {
      if (t(i, col) == 0) continue;
      auto c = F.mul(t(i, col), inv);
      for (std::size_t j = col; j < r_; ++j) t(i, j) = F.sub(t(i, j), F.mul(c, t(col, j)));
    }
  }
  return d;
}

Matrix Matrix::pow(const bigint& e) const {
  if (e < 0) return inverse().pow(-e);
  Matrix result = identity(F_, r_);
  Matrix b = *this;
  bigint k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = result * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return result;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (auto x : a_)
    if (x) return false;
  return true;
}

bool Matrix::is_scalar() const {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) {
      if (i != j && (*this)(i, j)) return false;
      if (i == j && (*this)(i, j) != (*this)(0, 0)) return false;
    }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << '\n';
  }
  return os.str();
}

Vec vec_mul(const Vec& v, const Matrix& m) {
  const FieldCtx& F = m.field();
  Vec r(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k]) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto y = m(k, j);
      if (y) r[j] = F.add(r[j], F.mul(v[k], y));
    }
  }
  return r;
}

Vec vec_add(const FieldCtx& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const FieldCtx& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const FieldCtx& F, const Vec& a, FieldCtx::elem c) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

FieldCtx::elem vec_dot(const FieldCtx& F, const Vec& a, const Vec& b) {
  FieldCtx::elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix r(a.field_ptr(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

std::vector<Vec> right_kernel(const Matrix& m) {
  Matrix t = m;
  auto piv = rref(t);
  const FieldCtx& F = m.field();
  std::vector<char> is_piv(m.cols(), 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = F.neg(t(r, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vec> left_kernel(const Matrix& m) { return right_kernel(m.transpose()); }

Matrix poly_eval(const Poly& p, const Matrix& m) {
  Matrix r(m.field_ptr(), m.rows(), m.cols());
  for (std::size_t i = p.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t j = 0; j < m.rows(); ++j) r(j, j) = m.field().add(r(j, j), p[i]);
  }
  return r;
}

namespace {

// Prime factorization of an exponent of GL_n(q): p^a * lcm(q^d - 1, d <= n).
std::map<bigint, int> gl_exponent_factorization(std::uint32_t p, std::uint64_t q, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::size_t>, std::map<bigint, int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<bigint, int> out;
  int a = 0;
  for (std::uint64_t pk = 1; pk < n; pk *= p) ++a;
  if (a) out[p] = a;
  for (std::size_t d = 1; d <= n; ++d) {
    for (const auto& [r, e] : factor(ipow(bigint(q), d) - 1)) {
      auto& cur = out[r];
      cur = std::max(cur, e);
    }
  }
  cache[key] = out;
  return out;
}

}  // namespace

bigint matrix_order(const Matrix& g) {
  const FieldCtx& F = g.field();
  auto fac = gl_exponent_factorization(F.p(), F.q(), g.rows());
  bigint e = 1;
  for (const auto& [r, k] : fac) e *= ipow(r, k);
  if (!g.pow(e).is_identity()) throw std::domain_error("matrix is not invertible");
  for (const auto& [r, k] : fac) {
    for (int i = 0; i < k; ++i) {
      if (g.pow(e / r).is_identity()) e /= r;
      else break;
    }
  }
  return e;
}

Poly vector_minimal_polynomial(const Vec& v, const Matrix& g) {
  const FieldCtx& F = g.field();
  std::size_t n = g.rows();
  std::vector<Vec> kry{v};
  for (;;) {
    // is the newest vector a combination of the earlier ones?
    Matrix K = Matrix::from_rows(g.field_ptr(), kry);
    auto ker = left_kernel(K);
    if (!ker.empty()) {
      // the kernel is one-dimensional with nonzero last coordinate
      Poly p(ker[0].begin(), ker[0].end());
      poly_trim(p);
      return poly_monic(F, p);
    }
    if (kry.size() > n) throw std::logic_error("Krylov sequence too long");
    kry.push_back(vec_mul(kry.back(), g));
  }
}

Poly minimal_polynomial(const Matrix& g) {
  Poly acc{1};
  std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    acc = poly_lcm(g.field(), acc, vector_minimal_polynomial(e, g));
    if (acc.size() == n + 1) break;
  }
  return acc;
}

}  // namespace ncov
