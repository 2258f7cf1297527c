#include "ncov/classical.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "ncov/error.hpp"

namespace ncov {

using elem = FieldCtx::elem;

Classical parse_classical(const std::string& s) {
  static const std::pair<const char*, Classical> names[] = {
      {"GL", Classical::GL},         {"SL", Classical::SL},           {"GU", Classical::GU},
      {"SU", Classical::SU},         {"Sp", Classical::Sp},           {"O+", Classical::Oplus},
      {"O-", Classical::Ominus},     {"O", Classical::Oodd},          {"SO+", Classical::SOplus},
      {"SO-", Classical::SOminus},   {"SO", Classical::SOodd},        {"Omega+", Classical::Omegaplus},
      {"Omega-", Classical::Omegaminus}, {"Omega", Classical::Omegaodd},
  };
  for (const auto& [n, c] : names)
    if (s == n) return c;
  throw Error(Errc::parse_error, "unknown classical family '" + s + "'");
}

std::string to_string(Classical c) {
  switch (c) {
    case Classical::GL: return "GL";
    case Classical::SL: return "SL";
    case Classical::GU: return "GU";
    case Classical::SU: return "SU";
    case Classical::Sp: return "Sp";
    case Classical::Oplus: return "O+";
    case Classical::Ominus: return "O-";
    case Classical::Oodd: return "O";
    case Classical::SOplus: return "SO+";
    case Classical::SOminus: return "SO-";
    case Classical::SOodd: return "SO";
    case Classical::Omegaplus: return "Omega+";
    case Classical::Omegaminus: return "Omega-";
    case Classical::Omegaodd: return "Omega";
  }
  return "?";
}

bool is_unitary(Classical c) { return c == Classical::GU || c == Classical::SU; }

bool is_orthogonal(Classical c) {
  return c != Classical::GL && c != Classical::SL && !is_unitary(c) && c != Classical::Sp;
}

int orthogonal_epsilon(Classical c) {
  switch (c) {
    case Classical::Oplus:
    case Classical::SOplus:
    case Classical::Omegaplus: return 1;
    case Classical::Ominus:
    case Classical::SOminus:
    case Classical::Omegaminus: return -1;
    default: return 0;
  }
}

namespace {

enum class OrthoLevel { O, SO, Omega };

OrthoLevel ortho_level(Classical c) {
  switch (c) {
    case Classical::SOplus:
    case Classical::SOminus:
    case Classical::SOodd: return OrthoLevel::SO;
    case Classical::Omegaplus:
    case Classical::Omegaminus:
    case Classical::Omegaodd: return OrthoLevel::Omega;
    default: return OrthoLevel::O;
  }
}

void check_parameters(Classical c, std::size_t n, std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
  if (n < 1) throw Error(Errc::unsupported_parameters, "dimension must be positive");
  if (c == Classical::Sp && n % 2) throw Error(Errc::unsupported_parameters, "Sp needs even dimension");
  if (is_orthogonal(c)) {
    int eps = orthogonal_epsilon(c);
    if (eps != 0 && n % 2) throw Error(Errc::unsupported_parameters, "O+/O- need even dimension");
    if (eps == 0 && (n % 2 == 0 || q % 2 == 0 || n < 3))
      throw Error(Errc::unsupported_parameters, "odd orthogonal groups need odd n >= 3 and q odd");
  }
}

}  // namespace

bigint classical_order(Classical c, std::size_t n, std::uint64_t q) {
  check_parameters(c, n, q);
  bigint Q = q;
  bigint r = 1;
  std::size_t m = n / 2;
  switch (c) {
    case Classical::GL:
    case Classical::SL:
      r = ipow(Q, n * (n - 1) / 2);
      for (std::size_t i = 1; i <= n; ++i) r *= ipow(Q, i) - 1;
      if (c == Classical::SL) r /= Q - 1;
      return r;
    case Classical::GU:
    case Classical::SU:
      r = ipow(Q, n * (n - 1) / 2);
      for (std::size_t i = 1; i <= n; ++i) r *= (i % 2) ? ipow(Q, i) + 1 : ipow(Q, i) - 1;
      if (c == Classical::SU) r /= Q + 1;
      return r;
    case Classical::Sp:
      r = ipow(Q, m * m);
      for (std::size_t i = 1; i <= m; ++i) r *= ipow(Q, 2 * i) - 1;
      return r;
    default: break;
  }
  int eps = orthogonal_epsilon(c);
  if (eps != 0) {
    r = 2 * ipow(Q, m * (m - 1)) * (eps == 1 ? ipow(Q, m) - 1 : ipow(Q, m) + 1);
    for (std::size_t i = 1; i < m; ++i) r *= ipow(Q, 2 * i) - 1;
  } else {
    r = 2 * ipow(Q, m * m);
    for (std::size_t i = 1; i <= m; ++i) r *= ipow(Q, 2 * i) - 1;
  }
  OrthoLevel lvl = ortho_level(c);
  bool odd_q = q % 2 == 1;
  if (lvl == OrthoLevel::SO && odd_q) r /= 2;
  if (lvl == OrthoLevel::Omega) r /= odd_q ? 4 : 2;
  return r;
}

std::uint64_t classical_center_order(Classical c, std::size_t n, std::uint64_t q) {
  check_parameters(c, n, q);
  switch (c) {
    case Classical::GL: return q - 1;
    case Classical::SL: return std::gcd<std::uint64_t>(n, q - 1);
    case Classical::GU: return q + 1;
    case Classical::SU: return std::gcd<std::uint64_t>(n, q + 1);
    case Classical::Sp: return q % 2 ? 2 : 1;
    default: break;
  }
  if (q % 2 == 0) return 1;
  int eps = orthogonal_epsilon(c);
  OrthoLevel lvl = ortho_level(c);
  if (eps == 0) return lvl == OrthoLevel::O ? 2 : 1;
  if (lvl != OrthoLevel::Omega) return 2;
  // -1 lies in Omega iff q^m = eps mod 4
  std::uint64_t qm = 1;
  for (std::size_t i = 0; i < n / 2; ++i) qm = (qm * (q % 4)) % 4;
  return (eps == 1 ? qm == 1 : qm == 3) ? 2 : 1;
}

// ---------------------------------------------------------------- export

namespace {

std::uint64_t encode_vec(const Vec& v, std::uint64_t q) {
  std::uint64_t x = 0;
  for (std::size_t i = v.size(); i-- > 0;) x = x * q + v[i];
  return x;
}

Vec decode_vec(std::uint64_t x, std::uint64_t q, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = elem(x % q);
    x /= q;
  }
  return v;
}

Vec normalize(const FieldCtx& F, const Vec& v) {
  for (auto x : v)
    if (x) return vec_scale(F, v, F.inv(x));
  return v;
}

struct Domain {
  FieldPtr F;
  PermDomain kind;
  std::vector<Vec> labels;
  std::unordered_map<std::uint64_t, std::uint32_t> index;

  std::uint32_t find(const Vec& v) const {
    Vec w = kind == PermDomain::vectors ? v : normalize(*F, v);
    auto it = index.find(encode_vec(w, F->q()));
    if (it == index.end()) throw Error(Errc::not_a_member, "matrix does not preserve the domain");
    return it->second;
  }

  Perm image(const Matrix& g) const {
    std::vector<point_t> img(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) img[i] = point_t(find(vec_mul(labels[i], g)));
    return Perm(std::move(img));
  }

  Perm frob_image(std::uint32_t k) const {
    std::vector<point_t> img(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      Vec w = labels[i];
      for (auto& x : w) x = F->frob(x, k);
      img[i] = point_t(find(w));
    }
    return Perm(std::move(img));
  }
};

Domain make_domain(const FieldPtr& F, std::size_t n, PermDomain kind, const std::optional<FormSpec>& form,
                   std::size_t bound) {
  const FieldCtx& K = *F;
  std::uint64_t q = K.q();
  bigint total = ipow(bigint(q), n);
  bigint count = kind == PermDomain::vectors ? bigint(total - 1) : bigint((total - 1) / (q - 1));
  bigint enum_bound = kind == PermDomain::singular_points ? bigint(bigint(1) << 22) : bigint(bound);
  if (count > enum_bound)
    throw Error(Errc::degree_too_large, "domain of size " + count.str() + " exceeds the bound");
  Domain d{F, kind, {}, {}};
  std::uint64_t N = static_cast<std::uint64_t>(total);
  for (std::uint64_t x = 1; x < N; ++x) {
    Vec v = decode_vec(x, q, n);
    if (kind != PermDomain::vectors) {
      // first nonzero coordinate must be 1
      elem lead = 0;
      for (auto c : v)
        if (c) {
          lead = c;
          break;
        }
      if (lead != 1) continue;
    }
    if (kind == PermDomain::singular_points) {
      if (!form) throw Error(Errc::unsupported_parameters, "singular points need a form");
      bool sing = true;
      if (form->kind == FormKind::quadratic) sing = quad_value(form->gram, v) == 0;
      else if (form->kind == FormKind::hermitian) sing = form_value(*form, v, v) == 0;
      if (!sing) continue;
    }
    d.index[x] = std::uint32_t(d.labels.size());
    d.labels.push_back(std::move(v));
  }
  if (d.labels.size() > bound)
    throw Error(Errc::degree_too_large, "domain of size " + std::to_string(d.labels.size()) + " exceeds the bound");
  if (d.labels.size() > 65535) throw Error(Errc::degree_too_large, "domain too large for 16-bit points");
  return d;
}

Domain make_domain(const PermExport& ex, std::size_t n) {
  Domain d{ex.field, ex.domain, ex.labels, {}};
  for (std::size_t i = 0; i < ex.labels.size(); ++i) d.index[encode_vec(ex.labels[i], ex.field->q())] = std::uint32_t(i);
  (void)n;
  return d;
}

}  // namespace

Perm PermExport::image(const Matrix& g) const { return make_domain(*this, g.rows()).image(g); }

PermExport to_permutation(const MatGroup& M, PermDomain domain, std::size_t degree_bound, bool allow_quotient) {
  Domain d = make_domain(M.field, M.n, domain, M.form, degree_bound);
  PermExport ex;
  ex.field = M.field;
  ex.domain = domain;
  ex.degree = d.labels.size();
  for (const auto& g : M.gens) ex.gens.push_back(d.image(g));
  PermGroup G(ex.gens, ex.degree);
  ex.order = G.order();
  if (domain == PermDomain::vectors) {
    ex.kernel_order = 1;
  } else if (M.order != 0) {
    if (M.order % ex.order != 0) throw std::logic_error("exported order does not divide the group order");
    ex.kernel_order = static_cast<std::uint64_t>(M.order / ex.order);
  }
  if (!allow_quotient && ex.kernel_order != 1)
    throw Error(Errc::unfaithful_without_quotient, "scalar kernel on the chosen domain");
  ex.labels = std::move(d.labels);
  return ex;
}

Matrix matrix_from_vector_perm(const PermExport& ex, const Perm& g) {
  if (ex.domain != PermDomain::vectors)
    throw Error(Errc::unsupported_parameters, "matrices are recovered from the vectors domain only");
  std::size_t n = ex.labels.empty() ? 0 : ex.labels[0].size();
  Domain d = make_domain(ex, n);
  Matrix m(ex.field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    m.set_row(i, ex.labels[g[d.find(e)]]);
  }
  return m;
}

FrobeniusExtension frobenius_extension(const MatGroup& M, std::uint32_t k, PermDomain domain) {
  std::uint32_t f = M.field->f();
  if (k == 0 || f % k) throw Error(Errc::unsupported_parameters, "k must divide the field degree");
  FrobeniusExtension out;
  out.base = to_permutation(M, domain);
  Domain d = make_domain(out.base, M.n);
  try {
    out.sigma = d.frob_image(k);
  } catch (const Error&) {
    throw Error(Errc::not_normalized, "the Frobenius map does not preserve the domain");
  }
  PermGroup B(out.base.gens, out.base.degree);
  Perm si = out.sigma.inverse();
  for (const auto& g : out.base.gens)
    if (!B.contains(si * g * out.sigma)) throw Error(Errc::not_normalized, "the Frobenius map does not normalize the group");
  out.gens = out.base.gens;
  if (!B.contains(out.sigma)) out.gens.push_back(out.sigma);
  out.order = PermGroup(out.gens, out.base.degree).order();
  return out;
}

// ------------------------------------------------------------- building

namespace {

struct Builder {
  FieldPtr F;
  std::size_t n;
  Classical family;
  std::optional<FormSpec> form;
  std::mt19937_64 rng{0x5eed};

  elem rand_elem() { return elem(rng() % F->q()); }
  elem rand_nonzero() { return elem(1 + rng() % (F->q() - 1)); }
  Vec rand_vec() {
    Vec v(n);
    for (auto& x : v) x = rand_elem();
    return v;
  }
  Vec rand_nonzero_vec() {
    for (;;) {
      Vec v = rand_vec();
      if (!vec_is_zero(v)) return v;
    }
  }

  Matrix transvection() {
    const FieldCtx& K = *F;
    for (;;) {
      Vec v = rand_nonzero_vec();
      Vec phi = rand_vec();
      std::size_t j = 0;
      while (!v[j]) ++j;
      elem c = K.div(vec_dot(K, phi, v), v[j]);
      phi[j] = K.sub(phi[j], c);
      if (vec_is_zero(phi)) continue;
      Matrix m = Matrix::identity(F, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m(a, b) = K.add(m(a, b), K.mul(phi[a], v[b]));
      return m;
    }
  }

  Matrix form_transvection(const Vec& v, elem lam, bool herm) {
    const FieldCtx& K = *F;
    Vec vb = v;
    if (herm)
      for (auto& x : vb) x = hconj(K, x);
    Vec col = vec_mul(vb, form->gram.transpose());  // F vbar^T
    Matrix m = Matrix::identity(F, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = K.add(m(a, b), K.mul(lam, K.mul(col[a], v[b])));
    return m;
  }

  Matrix symplectic_transvection() { return form_transvection(rand_nonzero_vec(), rand_nonzero(), false); }

  Matrix unitary_transvection() {
    const FieldCtx& K = *F;
    std::vector<elem> trace_zero;
    for (elem a = 1; a < K.q(); ++a)
      if (K.add(a, hconj(K, a)) == 0) trace_zero.push_back(a);
    for (;;) {
      Vec v = rand_nonzero_vec();
      if (form_value(*form, v, v) != 0) continue;
      return form_transvection(v, trace_zero[rng() % trace_zero.size()], true);
    }
  }

  Matrix rand_reflection() {
    for (;;) {
      Vec v = rand_nonzero_vec();
      if (quad_value(form->gram, v)) return reflection(*form, v);
    }
  }

  Matrix omega_pair() {
    const FieldCtx& K = *F;
    for (;;) {
      Vec v = rand_nonzero_vec(), w = rand_nonzero_vec();
      elem a = quad_value(form->gram, v), b = quad_value(form->gram, w);
      if (!a || !b) continue;
      if (K.p() != 2 && !K.is_square(K.mul(a, b))) continue;
      return reflection(*form, v) * reflection(*form, w);
    }
  }

  Matrix atom() {
    const FieldCtx& K = *F;
    switch (family) {
      case Classical::GL:
        if (rng() % 3 == 0) {
          Matrix d = Matrix::identity(F, n);
          d(0, 0) = K.primitive();
          return d;
        }
        return transvection();
      case Classical::SL: return transvection();
      case Classical::GU:
        if (rng() % 3 == 0) {
          Matrix d = Matrix::identity(F, n);
          elem lam = K.primitive();
          d(0, 0) = lam;
          d(n - 1, n - 1) = K.inv(hconj(K, lam));
          return d;
        }
        return unitary_transvection();
      case Classical::SU: return unitary_transvection();
      case Classical::Sp: return symplectic_transvection();
      default: break;
    }
    OrthoLevel lvl = ortho_level(family);
    if (lvl == OrthoLevel::Omega) return omega_pair();
    if (lvl == OrthoLevel::SO && K.p() != 2) return rand_reflection() * rand_reflection();
    return rand_reflection();
  }

  Matrix random_element() {
    Matrix g = atom();
    for (int i = 0; i < 4; ++i) g = g * atom();
    return g;
  }
};

}  // namespace

namespace {

MatGroup build_with_form(Classical family, FieldPtr F, std::size_t n, std::uint64_t q,
                         std::optional<FormSpec> form) {
  MatGroup M;
  M.field = F;
  M.n = n;
  M.q = q;
  M.family = family;
  M.form = form;
  M.order = classical_order(family, n, q);
  M.name = to_string(family) + std::to_string(n) + "(" + std::to_string(q) + ")";
  if (M.order == 1) return M;
  // one-dimensional groups are cyclic with an obvious generator
  if (n == 1) {
    const FieldCtx& K = *F;
    if (family == Classical::GL) M.gens.push_back(Matrix::scalar(F, 1, K.primitive()));
    else if (family == Classical::GU) M.gens.push_back(Matrix::scalar(F, 1, K.pow(K.primitive(), q - 1)));
    return M;
  }
  Builder b{F, n, family, form};
  bigint center = classical_center_order(family, n, q);
  bigint total = ipow(bigint(F->q()), n);
  PermDomain dom = total - 1 <= 4096 ? PermDomain::vectors : PermDomain::projective;
  bigint target = dom == PermDomain::vectors ? M.order : M.order / center;
  bool checkable = (dom == PermDomain::vectors || (total - 1) / (F->q() - 1) <= 4096) &&
                   target < (bigint(1) << 62);
  if (!checkable) {
    for (int i = 0; i < 4; ++i) M.gens.push_back(b.random_element());
    return M;
  }
  Domain d = make_domain(F, n, dom, form, 4096);
  std::vector<Perm> perms;
  std::uint64_t t = static_cast<std::uint64_t>(target);
  for (int attempt = 0; attempt < 60; ++attempt) {
    Matrix g = b.random_element();
    M.gens.push_back(g);
    perms.push_back(d.image(g));
    if (perms.size() < 2 && t > 2) continue;
    std::uint64_t got = group_order(perms, d.labels.size(), t);
    if (got == t) return M;
  }
  throw Error(Errc::unsupported_parameters, "could not generate " + M.name);
}

}  // namespace

MatGroup build_classical(Classical family, std::size_t n, std::uint64_t q) {
  check_parameters(family, n, q);
  auto pp = prime_power(q);
  std::uint32_t p = std::uint32_t(pp->first), f = std::uint32_t(pp->second);
  FieldPtr F = is_unitary(family) ? make_field(p, 2 * f) : make_field(p, f);
  std::optional<FormSpec> form;
  if (is_unitary(family)) form = standard_hermitian(F, n);
  else if (family == Classical::Sp) form = standard_symplectic(F, n);
  else if (is_orthogonal(family)) form = standard_quadratic(F, n, orthogonal_epsilon(family));
  return build_with_form(family, F, n, q, form);
}

MatGroup build_orthogonal_on(Classical family, const FormSpec& Q, std::uint64_t q) {
  if (!is_orthogonal(family) || Q.kind != FormKind::quadratic)
    throw Error(Errc::unsupported_parameters, "orthogonal family and quadratic form required");
  std::size_t n = Q.gram.rows();
  if (orthogonal_epsilon(family) != 0 && quadratic_type(Q.gram) != orthogonal_epsilon(family))
    throw Error(Errc::unsupported_parameters, "form type does not match the family");
  FormSpec f = Q;
  if (n % 2 == 0) {
    f.type_epsilon = orthogonal_epsilon(family);
    f.witt_defect = f.type_epsilon == 1 ? 0 : 1;
  }
  return build_with_form(family, Q.gram.field_ptr(), n, q, f);
}

}  // namespace ncov
