#include "ncov/contexts.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "ncov/classes.hpp"
#include "ncov/classical.hpp"
#include "ncov/error.hpp"
#include "ncov/factor.hpp"
#include "ncov/lattice.hpp"

namespace ncov {

using elem = FieldCtx::elem;

ProjectivePoints::ProjectivePoints(FieldPtr F, std::size_t n) : F_(std::move(F)), n_(n) {
  const std::uint64_t q = F_->q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  index_.assign(total, -1);
  for (std::uint64_t x = 1; x < total; ++x) {
    Vec v(n);
    std::uint64_t y = x;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = elem(y % q);
      y /= q;
    }
    if (normalize(v) != v) continue;
    index_[x] = static_cast<std::int32_t>(pts_.size());
    pts_.push_back(v);
  }
}

std::uint64_t ProjectivePoints::key(const Vec& v) const {
  std::uint64_t k = 0;
  for (std::size_t i = n_; i-- > 0;) k = k * F_->q() + v[i];
  return k;
}

Vec ProjectivePoints::normalize(Vec v) const {
  for (auto x : v)
    if (x) {
      elem inv = F_->inv(x);
      for (auto& y : v) y = F_->mul(y, inv);
      break;
    }
  return v;
}

std::uint32_t ProjectivePoints::find(const Vec& v) const {
  auto i = index_[key(normalize(v))];
  if (i < 0) throw std::logic_error("zero vector has no projective point");
  return static_cast<std::uint32_t>(i);
}

namespace {

Perm cycle_perm(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<point_t> img(n);
  std::iota(img.begin(), img.end(), point_t(0));
  for (std::size_t i = from; i < to; ++i) img[i] = point_t(i + 1 < to ? i + 1 : from);
  return Perm(img);
}

std::uint64_t checked_order(const std::vector<Perm>& gens, std::size_t degree, std::uint64_t expect,
                            const std::string& what) {
  std::uint64_t o = PermGroup(gens, degree).order();
  if (o != expect)
    throw std::logic_error(what + ": expected order " + std::to_string(expect) + ", got " +
                           std::to_string(o));
  return o;
}

Perm direct_sum(const Perm& a, const Perm& b) {
  std::vector<point_t> img(a.degree() + b.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) img[i] = a[i];
  for (std::size_t i = 0; i < b.degree(); ++i) img[a.degree() + i] = point_t(a.degree() + b[i]);
  return Perm(img);
}

std::pair<std::uint32_t, std::uint32_t> pf(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
  return {std::uint32_t(pp->first), std::uint32_t(pp->second)};
}

Vec frob_vec(const FieldCtx& F, Vec v, std::uint32_t k) {
  for (auto& x : v) x = F.frob(x, k);
  return v;
}

std::uint64_t to_u64(const bigint& b) { return static_cast<std::uint64_t>(b); }

// Totally isotropic lines of the symplectic space F^4, keyed by their
// reduced echelon basis.
struct LineSet {
  std::vector<std::pair<Vec, Vec>> lines;
  std::map<std::vector<elem>, std::uint32_t> index;

  static std::vector<elem> key(FieldPtr F, const Vec& u, const Vec& v) {
    Matrix m = Matrix::from_rows(F, {u, v});
    rref(m);
    return m.data();
  }
  std::uint32_t find(FieldPtr F, const Vec& u, const Vec& v) const {
    auto it = index.find(key(F, u, v));
    if (it == index.end()) throw std::logic_error("not a totally isotropic line");
    return it->second;
  }
};

}  // namespace

GroupFile alternating_context(std::size_t n) {
  if (n < 3) throw Error(Errc::unsupported_parameters, "alternating groups need n >= 3");
  GroupFile g;
  g.degree = n;
  g.name = "S" + std::to_string(n);
  g.socle_name = "A" + std::to_string(n);
  Perm t(n);
  {
    std::vector<point_t> img(n);
    std::iota(img.begin(), img.end(), point_t(0));
    std::swap(img[0], img[1]);
    t = Perm(img);
  }
  g.gens = {cycle_perm(n, 0, n), t};
  g.socle_gens = {cycle_perm(n, 0, 3), n % 2 ? cycle_perm(n, 0, n) : cycle_perm(n, 1, n)};
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  g.order = fact;
  g.socle_order = fact / 2;
  return g;
}

GroupFile mathieu_group(int n) {
  GroupFile g;
  if (n == 11) {
    g.degree = 11;
    g.name = "M11";
    g.gens = {parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", 11),
              parse_permutation("(3,7,11,8)(4,10,5,6)", 11)};
    g.order = 7920;
  } else if (n == 12) {
    g.degree = 12;
    g.name = "M12";
    g.gens = {parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", 12),
              parse_permutation("(3,7,11,8)(4,10,5,6)", 12),
              parse_permutation("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)};
    g.order = 95040;
  } else {
    throw Error(Errc::unsupported_parameters, "only M11 and M12 are built in");
  }
  checked_order(g.gens, g.degree, *g.order, g.name);
  g.socle_name = g.name;
  g.socle_gens = g.gens;
  g.socle_order = g.order;
  return g;
}

GroupFile mathieu12_with_outer() {
  GroupFile m = mathieu_group(12);
  const std::size_t n = 12;
  PermGroup G(m.gens, n);
  ElementTable T(G);
  ConjClassTable C = conjugacy_classes(T);
  std::mt19937_64 rng(12);
  // a generating pair with a an involution
  Perm a, b;
  for (;;) {
    a = G.random_element(rng);
    if (a.order() != 2) continue;
    b = G.random_element(rng);
    if (group_order({a, b}, n, G.order()) == G.order()) break;
  }
  const std::uint32_t cb = C.class_of[T.index_of(b)];
  const std::uint64_t oab = (a * b).order(), oabb = (a * b * b).order(), oabab = (a * b * a * b * b).order();
  const std::size_t N = 2 * n;
  Perm swap(N);
  {
    std::vector<point_t> img(N);
    for (std::size_t i = 0; i < N; ++i) img[i] = point_t((i + n) % N);
    swap = Perm(img);
  }
  // tau: a -> a, b -> y is an automorphism when <a+a, b+y> has order |G|.
  // Keep one that is an involution and moves the point stabilizer class.
  for (std::size_t e = 0; e < T.size(); ++e) {
    if (C.class_of[e] != cb) continue;
    Perm y = T.element(e);
    if ((a * y).order() != oab || (a * y * y).order() != oabb || (a * y * a * y * y).order() != oabab)
      continue;
    std::vector<Perm> dg{direct_sum(a, a), direct_sum(b, y)};
    if (group_order(dg, N, G.order()) != G.order()) continue;
    PermGroup D(dg, N, G.order(), {0});
    if (!D.contains(direct_sum(y, b))) continue;
    auto stab = D.stabilizer_generators(1);
    bool fixes_second = false;
    for (std::size_t p = n; p < N && !fixes_second; ++p) {
      bool all = true;
      for (const auto& s : stab) all = all && s[p] == p;
      fixes_second = all;
    }
    if (fixes_second) continue;
    GroupFile out;
    out.degree = N;
    out.name = "M12.2";
    out.socle_name = "M12";
    out.socle_gens = dg;
    out.socle_order = G.order();
    out.gens = dg;
    out.gens.push_back(swap);
    out.order = checked_order(out.gens, N, 2 * G.order(), "M12.2");
    return out;
  }
  throw std::logic_error("no outer involution of M12 found");
}

GroupFile linear_context(std::size_t n, std::uint64_t q, bool graph) {
  if (graph && n < 3) throw Error(Errc::unsupported_parameters, "the graph automorphism needs n >= 3");
  auto [p, f] = pf(q);
  FieldPtr F = make_field(p, f);
  ProjectivePoints P(F, n);
  const std::size_t N = P.size(), deg = graph ? 2 * N : N;
  auto act = [&](const Matrix& g) {
    std::vector<point_t> img(deg);
    for (std::size_t i = 0; i < N; ++i) img[i] = point_t(P.find(vec_mul(P.point(i), g)));
    if (graph) {
      Matrix dual = g.inverse().transpose();
      for (std::size_t i = 0; i < N; ++i) img[N + i] = point_t(N + P.find(vec_mul(P.point(i), dual)));
    }
    return Perm(img);
  };
  MatGroup S = build_classical(Classical::SL, n, q);
  MatGroup L = build_classical(Classical::GL, n, q);
  GroupFile out;
  out.degree = deg;
  out.socle_name = "PSL" + std::to_string(n) + "(" + std::to_string(q) + ")";
  out.name = "Aut(" + out.socle_name + ")";
  for (const auto& g : S.gens) out.socle_gens.push_back(act(g));
  const std::uint64_t d = std::gcd<std::uint64_t>(n, q - 1);
  const std::uint64_t simple = to_u64(S.order) / d;
  out.socle_order = checked_order(out.socle_gens, deg, simple, out.socle_name);
  out.gens = out.socle_gens;
  for (const auto& g : L.gens) out.gens.push_back(act(g));
  if (f > 1) {
    std::vector<point_t> img(deg);
    for (std::size_t i = 0; i < N; ++i) {
      img[i] = point_t(P.find(frob_vec(*F, P.point(i), 1)));
      if (graph) img[N + i] = point_t(N + img[i]);
    }
    out.gens.push_back(Perm(img));
  }
  if (graph) {
    std::vector<point_t> img(deg);
    for (std::size_t i = 0; i < N; ++i) {
      img[i] = point_t(N + i);
      img[N + i] = point_t(i);
    }
    out.gens.push_back(Perm(img));
  }
  out.order = checked_order(out.gens, deg, simple * d * f * (graph ? 2 : 1), out.name);
  return out;
}

GroupFile unitary_context(std::size_t n, std::uint64_t q) {
  auto [p, f] = pf(q);
  FieldPtr F = make_field(p, 2 * f);
  ProjectivePoints P(F, n);
  FormSpec H = standard_hermitian(F, n);
  std::vector<std::int32_t> pos(P.size(), -1);
  std::vector<std::uint32_t> iso;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (form_value(H, P.point(i), P.point(i)) == 0) {
      pos[i] = static_cast<std::int32_t>(iso.size());
      iso.push_back(static_cast<std::uint32_t>(i));
    }
  const std::size_t deg = iso.size();
  auto on_iso = [&](auto&& image_of) {
    std::vector<point_t> img(deg);
    for (std::size_t k = 0; k < deg; ++k) {
      auto j = pos[P.find(image_of(P.point(iso[k])))];
      if (j < 0) throw std::logic_error("isotropic point mapped off the quadric");
      img[k] = point_t(j);
    }
    return Perm(img);
  };
  auto act = [&](const Matrix& g) { return on_iso([&](const Vec& v) { return vec_mul(v, g); }); };
  MatGroup S = build_classical(Classical::SU, n, q);
  MatGroup U = build_classical(Classical::GU, n, q);
  GroupFile out;
  out.degree = deg;
  out.socle_name = "PSU" + std::to_string(n) + "(" + std::to_string(q) + ")";
  out.name = "Aut(" + out.socle_name + ")";
  for (const auto& g : S.gens) out.socle_gens.push_back(act(g));
  const std::uint64_t d = std::gcd<std::uint64_t>(n, q + 1);
  const std::uint64_t simple = to_u64(S.order) / d;
  out.socle_order = checked_order(out.socle_gens, deg, simple, out.socle_name);
  out.gens = out.socle_gens;
  for (const auto& g : U.gens) out.gens.push_back(act(g));
  out.gens.push_back(on_iso([&](const Vec& v) { return frob_vec(*F, v, 1); }));
  out.order = checked_order(out.gens, deg, simple * d * 2 * f, out.name);
  return out;
}

GroupFile symplectic_context(std::size_t n, std::uint64_t q) {
  auto [p, f] = pf(q);
  FieldPtr F = make_field(p, f);
  const FieldCtx& K = *F;
  ProjectivePoints P(F, n);
  const std::size_t N = P.size();
  const bool graph = n == 4 && p == 2;
  FormSpec B = standard_symplectic(F, n);
  LineSet L;
  if (graph) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) {
        if (form_value(B, P.point(i), P.point(j))) continue;
        auto k = LineSet::key(F, P.point(i), P.point(j));
        if (L.index.count(k)) continue;
        L.index[k] = static_cast<std::uint32_t>(L.lines.size());
        L.lines.emplace_back(P.point(i), P.point(j));
      }
    if (L.lines.size() != N) throw std::logic_error("wrong number of isotropic lines");
  }
  const std::size_t deg = graph ? 2 * N : N;
  auto act_vec = [&](auto&& image_of) {
    std::vector<point_t> img(deg);
    for (std::size_t i = 0; i < N; ++i) img[i] = point_t(P.find(image_of(P.point(i))));
    if (graph)
      for (std::size_t j = 0; j < N; ++j)
        img[N + j] = point_t(N + L.find(F, image_of(L.lines[j].first), image_of(L.lines[j].second)));
    return Perm(img);
  };
  auto act = [&](const Matrix& g) { return act_vec([&](const Vec& v) { return vec_mul(v, g); }); };
  MatGroup S = build_classical(Classical::Sp, n, q);
  GroupFile out;
  out.degree = deg;
  out.socle_name = "PSp" + std::to_string(n) + "(" + std::to_string(q) + ")";
  out.name = "Aut(" + out.socle_name + ")";
  for (const auto& g : S.gens) out.socle_gens.push_back(act(g));
  const std::uint64_t d = p == 2 ? 1 : 2;
  const std::uint64_t simple = to_u64(S.order) / d;
  out.socle_order = checked_order(out.socle_gens, deg, simple, out.socle_name);
  out.gens = out.socle_gens;
  if (p != 2) {
    // similitude scaling the form by a non-square
    Matrix s = Matrix::identity(F, n);
    for (std::size_t i = 0; i < n / 2; ++i) s(i, i) = K.primitive();
    out.gens.push_back(act(s));
  }
  if (f > 1) out.gens.push_back(act_vec([&](const Vec& v) { return frob_vec(K, v, 1); }));
  if (graph) {
    // Klein correspondence: the Pluecker image of an isotropic line lies in
    // a parabolic quadric; projecting from its nucleus lands in W(q) again.
    auto line_to_point = [&](const Vec& u, const Vec& v) {
      auto pl = [&](std::size_t i, std::size_t j) { return K.add(K.mul(u[i], v[j]), K.mul(u[j], v[i])); };
      return P.find(Vec{pl(0, 1), pl(0, 2), pl(1, 3), pl(2, 3)});
    };
    std::vector<point_t> img(deg);
    for (std::size_t j = 0; j < N; ++j) img[N + j] = point_t(line_to_point(L.lines[j].first, L.lines[j].second));
    for (std::size_t i = 0; i < N; ++i) {
      std::vector<std::uint32_t> through;
      for (std::size_t j = 0; j < N && through.size() < 2; ++j) {
        Matrix m = Matrix::from_rows(F, {L.lines[j].first, L.lines[j].second, P.point(i)});
        if (m.rank() == 2) through.push_back(img[N + j]);
      }
      img[i] = point_t(N + L.find(F, P.point(through[0]), P.point(through[1])));
    }
    out.gens.push_back(Perm(img));
  }
  out.order = checked_order(out.gens, deg, simple * d * f * (graph ? 2 : 1), out.name);
  return out;
}

}  // namespace ncov

namespace ncov {

GroupFile suzuki_context(std::uint64_t q) {
  auto [p, f] = pf(q);
  if (p != 2 || f % 2 == 0 || f < 3)
    throw Error(Errc::unsupported_parameters, "Suzuki groups need q = 2^(2m+1) >= 8");
  FieldPtr F = make_field(2, f);
  const FieldCtx& K = *F;
  const std::uint32_t m = (f - 1) / 2;
  auto theta = [&](elem x) { return K.frob(x, m + 1); };
  auto T = [&](elem a, elem b) {
    Matrix t = Matrix::identity(F, 4);
    elem at = theta(a);
    t(1, 0) = a;
    t(2, 0) = b;
    t(2, 1) = at;
    t(3, 0) = K.add(K.add(K.mul(K.mul(a, a), at), K.mul(a, b)), theta(b));
    t(3, 1) = K.add(K.mul(a, at), b);
    t(3, 2) = a;
    return t;
  };
  const elem k = K.primitive();
  const std::uint64_t s = std::uint64_t(1) << m;
  Matrix D(F, 4, 4), W(F, 4, 4);
  D(0, 0) = K.pow(k, 1 + s);
  D(1, 1) = K.pow(k, s);
  D(2, 2) = K.inv(K.pow(k, s));
  D(3, 3) = K.inv(K.pow(k, 1 + s));
  for (std::size_t i = 0; i < 4; ++i) W(i, 3 - i) = 1;
  std::vector<Matrix> mats{T(1, 0), T(k, 0), T(0, 1), D, W};
  ProjectivePoints P(F, 4);
  // the ovoid is the orbit of <e_1>
  std::vector<std::int32_t> pos(P.size(), -1);
  std::vector<std::uint32_t> ovoid{P.find(Vec{1, 0, 0, 0})};
  pos[ovoid[0]] = 0;
  for (std::size_t i = 0; i < ovoid.size(); ++i)
    for (const auto& g : mats) {
      auto j = P.find(vec_mul(P.point(ovoid[i]), g));
      if (pos[j] < 0) {
        pos[j] = static_cast<std::int32_t>(ovoid.size());
        ovoid.push_back(j);
      }
    }
  if (ovoid.size() != q * q + 1) throw std::logic_error("Suzuki ovoid has the wrong size");
  auto on_ovoid = [&](auto&& image_of) {
    std::vector<point_t> img(ovoid.size());
    for (std::size_t i = 0; i < ovoid.size(); ++i) {
      auto j = pos[P.find(image_of(P.point(ovoid[i])))];
      if (j < 0) throw std::logic_error("map does not preserve the ovoid");
      img[i] = point_t(j);
    }
    return Perm(img);
  };
  GroupFile out;
  out.degree = ovoid.size();
  out.socle_name = "Sz(" + std::to_string(q) + ")";
  out.name = "Aut(" + out.socle_name + ")";
  for (const auto& g : mats) out.socle_gens.push_back(on_ovoid([&](const Vec& v) { return vec_mul(v, g); }));
  const std::uint64_t order = q * q * (q * q + 1) * (q - 1);
  out.socle_order = checked_order(out.socle_gens, out.degree, order, out.socle_name);
  out.gens = out.socle_gens;
  out.gens.push_back(on_ovoid([&](const Vec& v) { return frob_vec(K, v, 1); }));
  out.order = checked_order(out.gens, out.degree, order * f, out.name);
  return out;
}

}  // namespace ncov

namespace ncov {

namespace {

struct Adj100 {
  std::size_t n;
  std::vector<std::vector<std::uint64_t>> rows;
  explicit Adj100(std::size_t n_) : n(n_), rows(n_, std::vector<std::uint64_t>((n_ + 63) / 64, 0)) {}
  void set(std::size_t u, std::size_t v) {
    rows[u][v / 64] |= std::uint64_t{1} << (v % 64);
    rows[v][u / 64] |= std::uint64_t{1} << (u % 64);
  }
  bool test(std::size_t u, std::size_t v) const { return (rows[u][v / 64] >> (v % 64)) & 1; }
};

bool is_srg(const Adj100& g, std::size_t k, std::size_t lambda, std::size_t mu) {
  for (std::size_t u = 0; u < g.n; ++u) {
    std::size_t deg = 0;
    for (auto w : g.rows[u]) deg += std::size_t(__builtin_popcountll(w));
    if (deg != k) return false;
    for (std::size_t v = u + 1; v < g.n; ++v) {
      std::size_t common = 0;
      for (std::size_t i = 0; i < g.rows[u].size(); ++i)
        common += std::size_t(__builtin_popcountll(g.rows[u][i] & g.rows[v][i]));
      if (common != (g.test(u, v) ? lambda : mu)) return false;
    }
  }
  return true;
}

// Depth-first search for a graph automorphism with 0 -> target.
std::optional<Perm> automorphism_moving(const Adj100& g, std::size_t target) {
  const std::size_t n = g.n, W = g.rows[0].size();
  std::vector<std::size_t> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v] && g.test(order[i], v)) {
        seen[v] = 1;
        order.push_back(v);
      }
  if (order.size() != n) return std::nullopt;
  std::vector<std::int64_t> img(n, -1);
  std::vector<char> used(n, 0);
  std::size_t steps = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t d) -> bool {
    if (d == n) return true;
    if (++steps > 5000000) return false;
    const std::size_t u = order[d];
    std::vector<std::uint64_t> cand(W, ~std::uint64_t{0});
    for (std::size_t e = 0; e < d; ++e) {
      const std::size_t x = order[e], y = static_cast<std::size_t>(img[x]);
      const bool a = g.test(u, x);
      for (std::size_t i = 0; i < W; ++i) cand[i] &= a ? g.rows[y][i] : ~g.rows[y][i];
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (d == 0 && w != target) continue;
      if (used[w] || !((cand[w / 64] >> (w % 64)) & 1) || g.test(w, w)) continue;
      img[u] = static_cast<std::int64_t>(w);
      used[w] = 1;
      if (go(d + 1)) return true;
      used[w] = 0;
      img[u] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  std::vector<point_t> im(n);
  for (std::size_t v = 0; v < n; ++v) im[v] = point_t(img[v]);
  return Perm(im);
}

// Conjugates of H under the overgroup generators, with the induced action.
struct ConjugateSet {
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<std::vector<point_t>> action;  // per generator
};

ConjugateSet conjugate_action(const ElementTable& T, const TableSubgroup& H,
                              const std::vector<Perm>& gens) {
  ConjugateSet S;
  std::map<std::vector<std::uint32_t>, std::size_t> id;
  S.members.push_back(H.elems);
  id[H.elems] = 0;
  std::vector<std::vector<std::int64_t>> act(gens.size());
  for (std::size_t i = 0; i < S.members.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm gi = gens[k].inverse();
      std::vector<std::uint32_t> img;
      for (auto e : S.members[i]) {
        auto j = T.conj_index(T.element(e), gens[k], gi);
        if (j < 0) throw std::logic_error("conjugate leaves the socle");
        img.push_back(static_cast<std::uint32_t>(j));
      }
      std::sort(img.begin(), img.end());
      auto it = id.find(img);
      std::size_t to;
      if (it == id.end()) {
        to = S.members.size();
        id[img] = to;
        S.members.push_back(std::move(img));
      } else {
        to = it->second;
      }
      if (act[k].size() <= i) act[k].resize(i + 1, -1);
      act[k][i] = static_cast<std::int64_t>(to);
    }
  for (auto& a : act) {
    a.resize(S.members.size(), -1);
    S.action.emplace_back(a.begin(), a.end());
  }
  return S;
}

}  // namespace

GroupFile janko2_context() {
  // U3(3).2 fixes one vertex and acts on the 36 conjugates of L3(2) and on
  // the 63 conjugates of a subgroup of order 96; the edges form a union of
  // its orbitals.
  GroupFile U = unitary_context(3, 3);
  PermGroup G0 = U.socle();
  ElementTable T(G0);
  ConjClassTable C = conjugacy_classes(T);
  auto maxes = search_maximal_subgroups(T, C, MaximalSearchOptions{});
  const TableSubgroup* L = nullptr;
  std::vector<const TableSubgroup*> big;
  for (const auto& m : maxes) {
    if (m.order() == 168) L = &m;
    if (m.order() == 96) big.push_back(&m);
  }
  if (!L || big.size() != 2) throw std::logic_error("unexpected maximal subgroups of U3(3)");
  const std::size_t ngen = U.gens.size();
  std::vector<std::size_t> socle_gen_pos;
  for (const auto& s : U.socle_gens)
    for (std::size_t k = 0; k < ngen; ++k)
      if (U.gens[k] == s) {
        socle_gen_pos.push_back(k);
        break;
      }
  ConjugateSet S36 = conjugate_action(T, *L, U.gens);
  if (S36.members.size() != 36) throw std::logic_error("L3(2) should have 36 conjugates");
  for (const TableSubgroup* B : big) {
    ConjugateSet S63 = conjugate_action(T, *B, U.gens);
    if (S63.members.size() != 63) continue;
    const std::size_t n = 100;
    std::vector<Perm> gens;
    for (std::size_t k = 0; k < ngen; ++k) {
      std::vector<point_t> img(n);
      img[0] = 0;
      for (std::size_t i = 0; i < 36; ++i) img[1 + i] = point_t(1 + S36.action[k][i]);
      for (std::size_t i = 0; i < 63; ++i) img[37 + i] = point_t(37 + S63.action[k][i]);
      gens.emplace_back(img);
    }
    // orbitals on pairs of non-base vertices, made symmetric
    std::vector<std::int32_t> orb(n * n, -1);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> orbitals;
    for (std::size_t u = 1; u < n; ++u)
      for (std::size_t v = 1; v < n; ++v) {
        if (u == v || orb[u * n + v] >= 0) continue;
        const auto id = static_cast<std::int32_t>(orbitals.size());
        orbitals.push_back({{u, v}});
        orb[u * n + v] = orb[v * n + u] = id;
        orbitals.back().push_back({v, u});
        for (std::size_t i = 0; i < orbitals.back().size(); ++i) {
          auto [a, b] = orbitals.back()[i];
          for (const auto& g : gens) {
            std::size_t c = g[a], d = g[b];
            if (orb[c * n + d] < 0) {
              orb[c * n + d] = orb[d * n + c] = id;
              orbitals.back().push_back({c, d});
              orbitals.back().push_back({d, c});
            }
          }
        }
      }
    const std::size_t no = orbitals.size();
    if (no > 20) throw std::logic_error("too many orbitals");
    for (std::uint32_t mask = 0; mask < (1u << no); ++mask) {
      Adj100 g(n);
      for (std::size_t v = 1; v <= 36; ++v) g.set(0, v);
      for (std::size_t o = 0; o < no; ++o)
        if (mask >> o & 1)
          for (auto [a, b] : orbitals[o]) g.set(a, b);
      if (!is_srg(g, 36, 14, 12)) continue;
      auto tau = automorphism_moving(g, 1);
      if (!tau) continue;
      std::vector<Perm> all = gens;
      all.push_back(*tau);
      std::vector<Perm> socle;
      for (auto k : socle_gen_pos) socle.push_back(gens[k]);
      // J2 is the normal closure of U3(3)
      std::vector<Perm> closure = socle;
      std::uint64_t o = group_order(closure, n);
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < closure.size() && !grew; ++i)
          for (const auto& a : all) {
            Perm c = conjugate(closure[i], a);
            if (PermGroup(closure, n, 0).contains(c)) continue;
            closure.push_back(c);
            o = group_order(closure, n);
            grew = true;
            break;
          }
      }
      GroupFile out;
      out.degree = n;
      out.name = "J2.2";
      out.socle_name = "J2";
      out.socle_gens = closure;
      out.socle_order = o;
      out.gens = all;
      out.order = PermGroup(all, n).order();
      if (o != 604800 || *out.order != 1209600)
        throw std::logic_error("Hall-Janko graph gave orders " + std::to_string(o) + " and " +
                               std::to_string(*out.order));
      return out;
    }
  }
  throw std::logic_error("no Hall-Janko graph among the orbital graphs");
}

}  // namespace ncov
