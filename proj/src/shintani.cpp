#include <array>
#include <map>
#include <set>

#include "ncov/classical.hpp"
#include "ncov/error.hpp"
#include "ncov/factor.hpp"
#include "ncov/weak.hpp"

namespace ncov {

namespace {

using elem = FieldCtx::elem;
using M2 = std::array<elem, 4>;  // row-major 2x2 over GF(q)
using KE = ExtField::elem;
using K2 = std::array<KE, 4>;

struct Sl2 {
  FieldPtr F;
  std::uint32_t a = 1;  // q0 = p^a
  std::uint64_t q = 0;
  std::vector<M2> elems;
  std::vector<std::int32_t> index;

  std::uint64_t key(const M2& m) const { return ((m[3] * q + m[2]) * q + m[1]) * q + m[0]; }
  std::int32_t find(const M2& m) const { return index[key(m)]; }
  M2 mul(const M2& x, const M2& y) const {
    const FieldCtx& K = *F;
    return {K.add(K.mul(x[0], y[0]), K.mul(x[1], y[2])), K.add(K.mul(x[0], y[1]), K.mul(x[1], y[3])),
            K.add(K.mul(x[2], y[0]), K.mul(x[3], y[2])), K.add(K.mul(x[2], y[1]), K.mul(x[3], y[3]))};
  }
  M2 inv(const M2& x) const { return {x[3], F->neg(x[1]), F->neg(x[2]), x[0]}; }
  M2 sigma(const M2& x) const {
    return {F->frob(x[0], a), F->frob(x[1], a), F->frob(x[2], a), F->frob(x[3], a)};
  }
  bool is_one(const M2& x) const { return x[0] == 1 && x[1] == 0 && x[2] == 0 && x[3] == 1; }
};

// 2x2 matrices over the extension K of GF(p) that contains the Lang solution.
struct Big {
  const ExtField* K;
  K2 mul(const K2& x, const K2& y) const {
    return {K->add(K->mul(x[0], y[0]), K->mul(x[1], y[2])), K->add(K->mul(x[0], y[1]), K->mul(x[1], y[3])),
            K->add(K->mul(x[2], y[0]), K->mul(x[3], y[2])), K->add(K->mul(x[2], y[1]), K->mul(x[3], y[3]))};
  }
  KE det(const K2& x) const { return K->sub(K->mul(x[0], x[3]), K->mul(x[1], x[2])); }
  K2 inv(const K2& x) const {
    KE d = K->inv(det(x));
    return {K->mul(x[3], d), K->neg(K->mul(x[1], d)), K->neg(K->mul(x[2], d)), K->mul(x[0], d)};
  }
  K2 frob(const K2& x, std::uint32_t j) const {
    return {K->frob(x[0], j), K->frob(x[1], j), K->frob(x[2], j), K->frob(x[3], j)};
  }
};

Matrix to_matrix(const FieldPtr& F, const M2& m) {
  Matrix out(F, 2, 2);
  out(0, 0) = m[0];
  out(0, 1) = m[1];
  out(1, 0) = m[2];
  out(1, 1) = m[3];
  return out;
}

// The F_p-subspace {y : y^(p^d) = y} of K, as coordinate vectors.
std::vector<Vec> fixed_subspace(const ExtField& K, std::uint32_t d) {
  const std::size_t D = K.degree();
  FieldPtr Fp = K.base_ptr();
  Matrix L(Fp, D, D);
  for (std::size_t i = 0; i < D; ++i) {
    KE u = K.zero();
    u[i] = 1;
    KE img = K.sub(K.frob(u, d), u);
    for (std::size_t j = 0; j < D; ++j) L(i, j) = img[j];
  }
  return left_kernel(L);
}

class Descent {
 public:
  Descent(const Sl2& G, std::uint32_t p, std::uint32_t e, std::uint64_t r)
      : G_(G), K_(make_field(p, 1), G.a * e * static_cast<std::uint32_t>(r)), B_{&K_} {
    // a root of the modulus of GF(q) inside K embeds GF(q)
    const FieldCtx& Fq = *G.F;
    const std::uint32_t deg = Fq.f();
    auto basis = fixed_subspace(K_, deg);
    const std::uint64_t count = G.q;
    KE theta;
    bool found = false;
    for (std::uint64_t c = 0; c < count && !found; ++c) {
      KE y = K_.zero();
      std::uint64_t cc = c;
      for (const auto& b : basis) {
        y = K_.add(y, K_.scale(KE(b.begin(), b.end()), elem(cc % p)));
        cc /= p;
      }
      KE v = K_.zero();
      const auto& m = Fq.modulus();
      for (std::size_t i = m.size(); i-- > 0;) v = K_.add(K_.mul(v, y), K_.constant(m[i]));
      if (K_.is_zero(v)) {
        theta = y;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no root of the field modulus in the extension");
    emb_.resize(G.q);
    for (std::uint64_t x = 0; x < G.q; ++x) {
      KE v = K_.zero(), pw = K_.one();
      for (std::uint64_t y = x; y; y /= p) {
        v = K_.add(v, K_.scale(pw, elem(y % p)));
        pw = K_.mul(pw, theta);
      }
      emb_[x] = v;
      back_[v] = elem(x);
    }
  }

  K2 up(const M2& m) const { return {emb_[m[0]], emb_[m[1]], emb_[m[2]], emb_[m[3]]}; }
  std::optional<M2> down(const K2& m) const {
    M2 out;
    for (int i = 0; i < 4; ++i) {
      auto it = back_.find(m[i]);
      if (it == back_.end()) return std::nullopt;
      out[i] = it->second;
    }
    return out;
  }
  const Big& big() const { return B_; }

  // a in SL2(K) with a^-sigma a = s: each row v solves v^sigma = v s^-1,
  // an F_p-linear condition on K^2.
  K2 lang(const M2& s) const {
    const std::size_t D = K_.degree();
    FieldPtr Fp = K_.base_ptr();
    K2 Mi = up(G_.inv(s));
    Matrix L(Fp, 2 * D, 2 * D);
    for (std::size_t i = 0; i < 2 * D; ++i) {
      KE v0 = K_.zero(), v1 = K_.zero();
      (i < D ? v0 : v1)[i % D] = 1;
      KE w0 = K_.sub(K_.frob(v0, G_.a), K_.add(K_.mul(v0, Mi[0]), K_.mul(v1, Mi[2])));
      KE w1 = K_.sub(K_.frob(v1, G_.a), K_.add(K_.mul(v0, Mi[1]), K_.mul(v1, Mi[3])));
      for (std::size_t j = 0; j < D; ++j) {
        L(i, j) = w0[j];
        L(i, D + j) = w1[j];
      }
    }
    auto ker = left_kernel(L);
    auto as_pair = [&](const Vec& x) {
      return std::make_pair(KE(x.begin(), x.begin() + D), KE(x.begin() + D, x.end()));
    };
    if (ker.empty()) throw Error(Errc::lang_steinberg_search_failed, "empty solution space");
    auto [a0, a1] = as_pair(ker[0]);
    for (std::size_t k = 1; k < ker.size(); ++k) {
      auto [b0, b1] = as_pair(ker[k]);
      K2 a{a0, a1, b0, b1};
      KE d = B_.det(a);
      if (K_.is_zero(d)) continue;
      KE di = K_.inv(d);
      a[0] = K_.mul(a[0], di);
      a[1] = K_.mul(a[1], di);
      return a;
    }
    throw Error(Errc::lang_steinberg_search_failed, "solutions span a line only");
  }

 private:
  const Sl2& G_;
  ExtField K_;
  Big B_;
  std::vector<KE> emb_;
  std::map<KE, elem> back_;
};

}  // namespace

bool ShintaniReport::ok() const {
  if (!bijective || coset_classes != perm_coset_classes || coset_classes != h_classes) return false;
  for (const auto& r : rows)
    if (r.centralizer_g != r.centralizer_h || !r.centralizer_conjugate || !r.well_defined) return false;
  return true;
}

ShintaniReport shintani_check(std::uint64_t q0, std::uint32_t e, std::uint64_t bound) {
  auto pp = prime_power(q0);
  if (!pp) throw Error(Errc::not_prime, std::to_string(q0) + " is not a prime power");
  if (e == 0) throw Error(Errc::unsupported_parameters, "e must be positive");
  const auto p = static_cast<std::uint32_t>(pp->first);
  Sl2 G;
  G.a = static_cast<std::uint32_t>(pp->second);
  G.q = 1;
  for (std::uint32_t i = 0; i < e; ++i) G.q *= q0;
  const std::uint64_t q = G.q;
  if (q > 256 || q * (q * q - 1) * e > bound)
    throw Error(Errc::group_too_large, "SL2(" + std::to_string(q) + ") extended by sigma");
  G.F = make_field(p, G.a * e);
  const FieldCtx& F = *G.F;
  G.index.assign(q * q * q * q, -1);
  for (elem x0 = 0; x0 < q; ++x0)
    for (elem x1 = 0; x1 < q; ++x1)
      for (elem x2 = 0; x2 < q; ++x2)
        for (elem x3 = 0; x3 < q; ++x3)
          if (F.sub(F.mul(x0, x3), F.mul(x1, x2)) == 1) {
            G.index[G.key({x0, x1, x2, x3})] = static_cast<std::int32_t>(G.elems.size());
            G.elems.push_back({x0, x1, x2, x3});
          }
  const std::size_t n = G.elems.size();
  std::vector<M2> gens;
  MatGroup SL = build_classical(Classical::SL, 2, q);
  for (const auto& g : SL.gens) gens.push_back({g(0, 0), g(0, 1), g(1, 0), g(1, 1)});

  ShintaniReport rep;
  rep.q0 = q0;
  rep.e = e;

  // classes of G x <sigma> in the coset sigma G are the orbits of
  // t -> (g^sigma)^-1 t g on G
  std::vector<std::int32_t> orbit_of(n, -1);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_of[i] >= 0) continue;
    const auto id = static_cast<std::int32_t>(orbits.size());
    orbits.push_back({static_cast<std::uint32_t>(i)});
    orbit_of[i] = id;
    for (std::size_t k = 0; k < orbits.back().size(); ++k) {
      const M2 t = G.elems[orbits.back()[k]];
      for (const auto& g : gens) {
        M2 u = G.mul(G.mul(G.inv(G.sigma(g)), t), g);
        auto j = G.find(u);
        if (orbit_of[j] < 0) {
          orbit_of[j] = id;
          orbits.back().push_back(static_cast<std::uint32_t>(j));
        }
      }
    }
  }
  rep.coset_classes = orbits.size();

  // H = SL2(q0), the sigma-fixed points, and its classes
  std::vector<std::uint32_t> H;
  for (std::size_t i = 0; i < n; ++i)
    if (G.sigma(G.elems[i]) == G.elems[i]) H.push_back(static_cast<std::uint32_t>(i));
  std::map<std::uint32_t, std::size_t> h_class;
  for (auto x : H) {
    if (h_class.count(x)) continue;
    const std::size_t id = rep.h_classes++;
    for (auto y : H) {
      const M2& hy = G.elems[y];
      h_class[static_cast<std::uint32_t>(G.find(G.mul(G.mul(G.inv(hy), G.elems[x]), hy)))] = id;
    }
  }

  auto norm = [&](const M2& s) {
    M2 N = s, cur = s;
    for (std::uint32_t i = 1; i < e; ++i) {
      cur = G.sigma(cur);
      N = G.mul(cur, N);
    }
    return N;
  };
  auto order = [&](const M2& x) {
    std::uint64_t r = 1;
    for (M2 y = x; !G.is_one(y); y = G.mul(y, x)) ++r;
    return r;
  };
  std::map<std::uint64_t, std::unique_ptr<Descent>> descents;
  auto descent = [&](std::uint64_t r) -> const Descent& {
    auto& d = descents[r];
    if (!d) d = std::make_unique<Descent>(G, p, e, r);
    return *d;
  };
  // image class of sigma s; also returns a and N
  auto image = [&](const M2& s, K2* a_out, M2* n_out) -> std::size_t {
    M2 N = norm(s);
    const Descent& D = descent(order(N));
    const Big& B = D.big();
    K2 a = D.lang(s);
    K2 check = B.mul(B.inv(B.frob(a, G.a)), a);
    if (check != D.up(s)) throw Error(Errc::lang_steinberg_search_failed, "a^-sigma a differs from s");
    auto f = D.down(B.mul(B.mul(a, D.up(N)), B.inv(a)));
    if (!f) throw Error(Errc::lang_steinberg_search_failed, "image outside GF(q)");
    auto it = h_class.find(static_cast<std::uint32_t>(G.find(*f)));
    if (it == h_class.end()) throw Error(Errc::lang_steinberg_search_failed, "image is not sigma-fixed");
    if (a_out) *a_out = a;
    if (n_out) *n_out = N;
    return it->second;
  };

  std::set<std::size_t> hit;
  for (const auto& orb : orbits) {
    ShintaniRow row;
    const M2 s = G.elems[orb.front()];
    row.s = to_matrix(G.F, s);
    row.class_size = orb.size();
    row.centralizer_g = n / orb.size();
    K2 a;
    M2 N;
    row.h_class = image(s, &a, &N);
    row.norm_order = order(N);
    hit.insert(row.h_class);
    row.well_defined = true;
    for (std::size_t k : {orb.size() / 2, orb.size() - 1})
      row.well_defined = row.well_defined && image(G.elems[orb[k]], nullptr, nullptr) == row.h_class;
    // C_G(sigma s) against a^-1 C_H(f) a
    const Descent& D = descent(row.norm_order);
    const Big& B = D.big();
    K2 ai = B.inv(a);
    M2 f = *D.down(B.mul(B.mul(a, D.up(N)), ai));
    std::set<std::uint32_t> cg, conj;
    for (std::size_t i = 0; i < n; ++i) {
      const M2& g = G.elems[i];
      if (G.mul(G.mul(G.inv(G.sigma(g)), s), g) == s) cg.insert(static_cast<std::uint32_t>(i));
    }
    bool inside = true;
    for (auto y : H) {
      const M2& h = G.elems[y];
      if (G.mul(h, f) != G.mul(f, h)) continue;
      ++row.centralizer_h;
      auto g = D.down(B.mul(B.mul(ai, D.up(h)), a));
      inside = inside && g && cg.count(static_cast<std::uint32_t>(G.find(*g)));
    }
    row.centralizer_conjugate = inside && row.centralizer_h == cg.size();
    rep.rows.push_back(std::move(row));
  }
  rep.bijective = hit.size() == rep.rows.size() && hit.size() == rep.h_classes;

  // the same count from G x <sigma> built as a permutation group
  FrobeniusExtension X = frobenius_extension(SL, G.a, PermDomain::vectors);
  PermGroup XG(X.gens, X.base.degree);
  PermGroup base(X.base.gens, X.base.degree);
  ElementTable T(XG, bound);
  ConjClassTable C = conjugacy_classes(T);
  Perm si = X.sigma.inverse();
  for (const auto& r : C.reps)
    if (base.contains(si * r)) ++rep.perm_coset_classes;
  return rep;
}

}  // namespace ncov
