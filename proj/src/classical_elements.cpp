#include <algorithm>
#include <numeric>
#include <random>

#include "ncov/classical.hpp"
#include "ncov/error.hpp"

namespace ncov {

using elem = FieldCtx::elem;

namespace {

// Matrix of x -> x b on K = F[y]/h in the basis 1, y, ..., y^(k-1).
Matrix multiplication_matrix(const ExtField& K, const ExtField::elem& b) {
  std::size_t k = K.degree();
  Matrix m(K.base_ptr(), k, k);
  ExtField::elem yi = K.one();
  ExtField::elem y = K.gen();
  for (std::size_t i = 0; i < k; ++i) {
    ExtField::elem r = K.mul(yi, b);
    for (std::size_t j = 0; j < k; ++j) m(i, j) = r[j];
    yi = K.mul(yi, y);
  }
  return m;
}

Matrix to_standard(const Matrix& g, const FormSpec& f) {
  Standardization S = standardize(f);
  Matrix r = S.P * g * S.P.inverse();
  if (!preserves(r, S.standard)) throw std::logic_error("standardization failed");
  return r;
}

Matrix antidiag(FieldPtr F, std::size_t n) {
  Matrix J(F, n, n);
  for (std::size_t i = 0; i < n; ++i) J(i, n - 1 - i) = 1;
  return J;
}

FormSpec block_form(const FormSpec& a, const FormSpec& b) {
  FormSpec f{a.kind, block_diag(a.gram, b.gram), 0, -1};
  return f;
}

std::pair<std::uint32_t, std::uint32_t> pf(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
  return {std::uint32_t(pp->first), std::uint32_t(pp->second)};
}

bigint lcm_big(const bigint& a, const bigint& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// k coprime to the order of s with det(s^k) = target.
Matrix power_with_det(const Matrix& s, elem target) {
  const FieldCtx& F = s.field();
  bigint ord = matrix_order(s);
  elem d = s.det();
  elem cur = d;
  for (std::uint64_t k = 1; k < 2000000; ++k) {
    if (cur == target && boost::multiprecision::gcd(bigint(k), ord) == 1) return s.pow(k);
    cur = F.mul(cur, d);
  }
  throw Error(Errc::unsupported_parameters, "no power with the required determinant");
}

}  // namespace

Matrix singer_cycle(const SingerSpec& spec) {
  bigint ord = singer_order(spec);
  auto [p, f] = pf(spec.q);
  std::size_t n = spec.n;
  bigint q = spec.q;
  Matrix g;
  switch (spec.family) {
    case SingerFamily::GL:
    case SingerFamily::SL: {
      ExtField K(make_field(p, f), std::uint32_t(n));
      auto a = K.primitive();
      if (spec.family == SingerFamily::SL) a = K.pow(a, q - 1);
      g = multiplication_matrix(K, a);
      break;
    }
    case SingerFamily::GU:
    case SingerFamily::SU: {
      ExtField K(make_field(p, 2 * f), std::uint32_t(n));
      auto b = K.pow(K.primitive(), ipow(q, n) - 1);
      Matrix m = multiplication_matrix(K, b);
      auto form = find_invariant_form({m}, FormKind::hermitian);
      if (!form) throw std::logic_error("no invariant hermitian form");
      g = to_standard(m, *form);
      if (spec.family == SingerFamily::SU) g = g.pow(q + 1);
      break;
    }
    case SingerFamily::Sp:
    case SingerFamily::Ominus:
    case SingerFamily::Omegaminus: {
      ExtField K(make_field(p, f), std::uint32_t(n));
      auto b = K.pow(K.primitive(), ipow(q, n / 2) - 1);
      Matrix m = multiplication_matrix(K, b);
      FormKind kind = spec.family == SingerFamily::Sp ? FormKind::symplectic : FormKind::quadratic;
      auto form = find_invariant_form({m}, kind);
      if (!form) throw std::logic_error("no invariant form for the Singer cycle");
      g = to_standard(m, *form);
      if (spec.family == SingerFamily::Omegaminus && p != 2) g = g * g;
      break;
    }
  }
  if (matrix_order(g) != ord) throw std::logic_error("Singer cycle has the wrong order");
  return g;
}

bool is_irreducible(const Matrix& g) {
  Poly m = minimal_polynomial(g);
  return m.size() == g.rows() + 1 && poly_is_irreducible(g.field(), m);
}

std::vector<std::size_t> action_type(const Matrix& g) {
  const FieldCtx& F = g.field();
  std::size_t n = g.rows();
  Poly m = minimal_polynomial(g);
  if (poly_gcd(F, m, poly_deriv(F, m)).size() != 1)
    throw Error(Errc::not_semisimple, "minimal polynomial is not squarefree");
  std::vector<std::size_t> out;
  Poly rem = m;
  Poly x{0, 1};
  Poly h = x;
  for (std::size_t d = 1; rem.size() > 1; ++d) {
    h = poly_powmod(F, h, F.q(), rem);
    Poly gd = poly_gcd(F, rem, poly_sub(F, h, x));
    if (gd.size() > 1) {
      std::size_t dim = n - poly_eval(gd, g).rank();
      for (std::size_t i = 0; i < dim / d; ++i) out.push_back(d);
      Poly quo, r;
      poly_divmod(F, rem, gd, quo, r);
      rem = quo;
      if (rem.size() > 1) h = poly_mod(F, h, rem);
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Matrix omega_plus_singer_sum(std::size_t m, std::size_t n, std::uint64_t q) {
  if (m % 2 || n % 2 || m < 2 || 2 * m > n)
    throw Error(Errc::unsupported_parameters, "need m, n even with 2 <= m <= n/2");
  Matrix s1 = singer_cycle({SingerFamily::Ominus, m, q});
  Matrix s2 = singer_cycle({SingerFamily::Ominus, n - m, q});
  FieldPtr F = s1.field_ptr();
  FormSpec f = block_form(standard_quadratic(F, m, -1), standard_quadratic(F, n - m, -1));
  return to_standard(block_diag(s1, s2), f);
}

Matrix not_omega_witness(std::size_t l, std::uint64_t q) {
  if (q % 2 == 0) throw Error(Errc::unsupported_parameters, "q must be odd");
  if (l < 1) throw Error(Errc::unsupported_parameters, "l must be positive");
  Matrix s = singer_cycle({SingerFamily::GL, l, q});
  Matrix J = antidiag(s.field_ptr(), l);
  return block_diag(s, J * s.inverse().transpose() * J);
}

BertrandFamily parse_bertrand_family(const std::string& s) {
  if (s == "SU") return BertrandFamily::SU;
  if (s == "Sp") return BertrandFamily::Sp;
  if (s == "Omega" || s == "Omega-odd" || s == "Omegaodd") return BertrandFamily::OmegaOdd;
  throw Error(Errc::parse_error, "unknown Bertrand family '" + s + "'");
}

BertrandElement bertrand_element(BertrandFamily family, std::size_t n, std::uint64_t q) {
  pf(q);
  BertrandElement out;
  bigint Q = q;
  switch (family) {
    case BertrandFamily::Sp: {
      if (n % 2 || n < 10) throw Error(Errc::unsupported_parameters, "Sp Bertrand elements need even n >= 10");
      std::size_t t = bertrand_number(n / 2);
      out.t = t;
      Matrix s1 = singer_cycle({SingerFamily::Sp, 2 * t, q});
      Matrix s2 = singer_cycle({SingerFamily::Sp, n - 2 * t, q});
      FieldPtr F = s1.field_ptr();
      FormSpec fm = block_form(standard_symplectic(F, 2 * t), standard_symplectic(F, n - 2 * t));
      out.z = to_standard(block_diag(s1, s2), fm);
      out.expected_order = lcm_big(ipow(Q, t) + 1, ipow(Q, n / 2 - t) + 1);
      out.expected_type = {2 * t, n - 2 * t};
      break;
    }
    case BertrandFamily::OmegaOdd: {
      if (n % 2 == 0 || q % 2 == 0 || n < 11)
        throw Error(Errc::unsupported_parameters, "odd orthogonal Bertrand elements need n >= 11 and nq odd");
      std::size_t t = bertrand_number((n - 1) / 2);
      out.t = t;
      Matrix s1 = singer_cycle({SingerFamily::Ominus, 2 * t, q});
      Matrix s2 = singer_cycle({SingerFamily::Ominus, n - 2 * t - 1, q});
      FieldPtr F = s1.field_ptr();
      Matrix one = Matrix::identity(F, 1);
      FormSpec unit{FormKind::quadratic, one, 0, -1};
      FormSpec fm = block_form(block_form(unit, standard_quadratic(F, 2 * t, -1)),
                               standard_quadratic(F, n - 2 * t - 1, -1));
      out.z = to_standard(block_diag(block_diag(one, s1), s2), fm);
      out.expected_order = lcm_big(ipow(Q, t) + 1, ipow(Q, (n - 1) / 2 - t) + 1);
      out.expected_type = {2 * t, n - 2 * t - 1, 1};
      break;
    }
    case BertrandFamily::SU: {
      if (n < 5 || n == 6) throw Error(Errc::unsupported_parameters, "SU Bertrand elements need n >= 5, n != 6");
      std::size_t t = bertrand_number(n);
      out.t = t;
      Matrix s = singer_cycle({SingerFamily::GU, t, q});
      FieldPtr F = s.field_ptr();
      const FieldCtx& K = *F;
      if (n % 2 == 0) {
        Matrix s2 = singer_cycle({SingerFamily::GU, n - t, q});
        s2 = power_with_det(s2, K.inv(s.det()));
        FormSpec fm = block_form(standard_hermitian(F, t), standard_hermitian(F, n - t));
        out.z = to_standard(block_diag(s, s2), fm);
        out.expected_order = lcm_big(ipow(Q, t) + 1, ipow(Q, n - t) + 1);
        out.expected_type = {t, n - t};
      } else {
        std::size_t r = (n - t) / 2;
        Matrix x = singer_cycle({SingerFamily::GL, r, q * q});
        if (x.field_ptr() != F) throw std::logic_error("field mismatch");
        Matrix J = antidiag(F, r);
        Matrix D = J * hconj(x).inverse().transpose() * J;
        elem dx = x.det();
        Matrix sk = power_with_det(s, K.div(hconj(K, dx), dx));
        out.z = block_diag(block_diag(x, sk), D);
        out.expected_order = lcm_big(ipow(Q, t) + 1, ipow(Q, n - t) - 1);
        out.expected_type = {t, r, r};
      }
      std::sort(out.expected_type.rbegin(), out.expected_type.rend());
      if (out.z.det() != 1) throw std::logic_error("Bertrand element not in SU");
      if (!preserves(out.z, standard_hermitian(F, n))) throw std::logic_error("Bertrand element not unitary");
      break;
    }
  }
  std::sort(out.expected_type.rbegin(), out.expected_type.rend());
  return out;
}

RegularUnipotents regular_unipotents_sp(std::size_t n, std::uint64_t q) {
  if (n < 6 || n % 2 || q % 2)
    throw Error(Errc::unsupported_parameters, "regular unipotents u+, u- need even n >= 6 and q even");
  auto [p, f] = pf(q);
  FieldPtr F = make_field(p, f);
  std::size_t m = n / 2;
  Matrix up(F, n, n), um(F, n, n);
  for (Matrix* u : {&up, &um}) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) (*u)(i, j) = 1;  // A1
      (*u)(m + i, m + i) = 1;                               // A2
      if (i + 1 < m) (*u)(m + i, m + i + 1) = 1;
      (*u)(i, m) = 1;  // first column of B: all ones
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) um(i, m + 1) = 1;  // second column of B-
  Matrix Up(F, n, n), Um(F, n, n);
  for (std::size_t i = 0; i < m; ++i) {
    Up(i, n - 1 - i) = 1;
    Um(i, n - 1 - i) = 1;
  }
  Up(m, m) = 1;
  Um(m - 1, m - 1) = 1;
  Um(m, m) = anisotropic_constant(*F);
  RegularUnipotents out;
  out.u_plus = up;
  out.u_minus = um;
  out.Q_plus = FormSpec{FormKind::quadratic, Up, 1, 0};
  out.Q_minus = FormSpec{FormKind::quadratic, Um, -1, 1};
  out.symplectic = standard_symplectic(F, n);
  if (preserves(um, out.Q_minus)) return out;
  // When T^2 + T + 1 is reducible (q a square) the block matrix above only
  // fixes plus-type forms. Take instead the 2-part of a random product of
  // orthogonal reflections for Q_minus until it is a single Jordan block.
  out.u_minus_from_blocks = false;
  std::mt19937_64 rng(2024);
  auto random_reflection = [&]() {
    for (;;) {
      Vec w(n);
      for (auto& x : w) x = elem(rng() % q);
      if (quad_value(Um, w)) return reflection(out.Q_minus, w);
    }
  };
  for (int attempt = 0; attempt < 20000; ++attempt) {
    Matrix x = random_reflection();
    for (std::size_t i = 0; i < n; ++i) x = x * random_reflection();
    bigint ord = matrix_order(x);
    while (ord % 2 == 0) ord /= 2;
    Matrix u = x.pow(ord);
    if (u.is_identity()) continue;
    if (jordan_partition(u).size() == 1) {
      out.u_minus = u;
      return out;
    }
  }
  throw std::logic_error("no regular unipotent element found in the minus-type group");
}

std::vector<std::size_t> jordan_partition(const Matrix& u) {
  std::size_t n = u.rows();
  Matrix N = u - Matrix::identity(u.field_ptr(), n);
  if (!N.pow(n).is_zero()) throw Error(Errc::not_unipotent, "matrix is not unipotent");
  std::vector<std::size_t> rank{n};
  Matrix Nk = Matrix::identity(u.field_ptr(), n);
  while (rank.back() > 0) {
    Nk = Nk * N;
    rank.push_back(Nk.rank());
  }
  // blocks of size >= k: rank[k-1] - rank[k]
  std::vector<std::size_t> out;
  for (std::size_t k = rank.size() - 1; k >= 1; --k) {
    std::size_t at_least = rank[k - 1] - rank[k];
    std::size_t longer = k + 1 < rank.size() ? rank[k] - rank[k + 1] : 0;
    for (std::size_t i = 0; i < at_least - longer; ++i) out.push_back(k);
  }
  return out;
}

std::pair<std::size_t, std::size_t> fixed_form_types(const Matrix& u, const FormSpec& symplectic) {
  const FieldCtx& F = u.field();
  if (F.p() != 2) throw Error(Errc::unsupported_parameters, "q must be even");
  std::size_t n = u.rows();
  FieldPtr Fp = u.field_ptr();
  // every quadratic form polarizing to the symplectic form is Q0 + lambda^2
  Matrix U0(Fp, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) U0(i, j) = symplectic.gram(i, j);
  std::uint64_t total = static_cast<std::uint64_t>(ipow(bigint(F.q()), n));
  std::pair<std::size_t, std::size_t> counts{0, 0};
  Matrix ut = u.transpose();
  for (std::uint64_t x = 0; x < total; ++x) {
    Matrix U = U0;
    std::uint64_t y = x;
    for (std::size_t i = 0; i < n; ++i) {
      U(i, i) = elem(y % F.q());
      y /= F.q();
    }
    if (upper_fold(u * U * ut) != U) continue;
    if (quadratic_type(U) == 1) ++counts.first;
    else ++counts.second;
  }
  return counts;
}

}  // namespace ncov
