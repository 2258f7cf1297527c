#include <map>
#include <random>

#include "ncov/classical.hpp"
#include "ncov/error.hpp"

namespace ncov {

using elem = FieldCtx::elem;

AschbacherKind parse_aschbacher_kind(const std::string& s) {
  if (s == "subspace" || s == "C1") return AschbacherKind::subspace;
  if (s == "sum" || s == "C2") return AschbacherKind::sum;
  if (s == "field" || s == "field-extension" || s == "C3") return AschbacherKind::field_extension;
  if (s == "so-in-sp" || s == "C8") return AschbacherKind::so_in_sp;
  throw Error(Errc::parse_error, "unknown subgroup kind '" + s + "'");
}

std::vector<Matrix> determinant_kernel(const std::vector<Matrix>& gens) {
  if (gens.empty()) return {};
  FieldPtr F = gens[0].field_ptr();
  std::size_t n = gens[0].rows();
  // transversal of the determinant image
  std::map<elem, Matrix> trans;
  trans.emplace(1, Matrix::identity(F, n));
  std::vector<elem> queue{1};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      elem d = F->mul(queue[i], g.det());
      if (!trans.count(d)) {
        trans.emplace(d, trans.at(queue[i]) * g);
        queue.push_back(d);
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& [d, t] : trans)
    for (const auto& g : gens) {
      Matrix s = t * g * trans.at(F->mul(d, g.det())).inverse();
      if (!s.is_identity() && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  return out;
}

namespace {

// Product replacement on matrices.
class RandomMatrices {
 public:
  RandomMatrices(const std::vector<Matrix>& gens, std::uint64_t seed) : rng_(seed) {
    while (slots_.size() < 10)
      for (const auto& g : gens) slots_.push_back(g);
    for (int i = 0; i < 60; ++i) next();
  }
  Matrix next() {
    std::size_t i = rng_() % slots_.size(), j = rng_() % slots_.size();
    if (i == j) j = (j + 1) % slots_.size();
    slots_[i] = (rng_() & 1) ? slots_[i] * slots_[j] : slots_[j] * slots_[i];
    acc_ = acc_.rows() ? acc_ * slots_[i] : slots_[i];
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Matrix> slots_;
  Matrix acc_;
};

using Key = std::vector<elem>;

Key subspace_key(const FieldPtr& F, const std::vector<Vec>& rows) {
  Matrix m = Matrix::from_rows(F, rows);
  auto piv = rref(m);
  Key k;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    Vec r = m.row(i);
    k.insert(k.end(), r.begin(), r.end());
  }
  return k;
}

// An object is a list of subspaces, unordered; the key sorts their keys.
using Object = std::vector<std::vector<Vec>>;

Key object_key(const FieldPtr& F, const Object& obj) {
  std::vector<Key> parts;
  for (const auto& s : obj) parts.push_back(subspace_key(F, s));
  std::sort(parts.begin(), parts.end());
  Key k;
  for (const auto& p : parts) {
    k.insert(k.end(), p.begin(), p.end());
    k.push_back(elem(-1));
  }
  return k;
}

Object act(const Object& obj, const Matrix& g) {
  Object r = obj;
  for (auto& s : r)
    for (auto& v : s) v = vec_mul(v, g);
  return r;
}

std::uint64_t export_order(const MatGroup& M, PermDomain dom) {
  return to_permutation(M, dom, 1u << 14).order;
}

// Stabilizer of an object in the ambient group, by random Schreier
// generators checked against the orbit-stabilizer count.
MatGroup object_stabilizer(const MatGroup& ambient, const Object& obj, const std::string& name,
                           const std::string& tag) {
  FieldPtr F = ambient.field;
  std::map<Key, std::size_t> where;
  std::vector<Object> orbit{obj};
  std::vector<Matrix> trans{Matrix::identity(F, ambient.n)};
  where[object_key(F, obj)] = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : ambient.gens) {
      Object o = act(orbit[i], g);
      Key k = object_key(F, o);
      if (!where.count(k)) {
        where[k] = orbit.size();
        orbit.push_back(o);
        trans.push_back(trans[i] * g);
      }
    }
  }
  bigint total = ipow(bigint(F->q()), ambient.n);
  PermDomain dom = total - 1 <= 4096 ? PermDomain::vectors : PermDomain::projective;
  std::uint64_t amb = export_order(ambient, dom);
  if (amb % orbit.size()) throw std::logic_error("orbit length does not divide the group order");
  std::uint64_t target = amb / orbit.size();
  MatGroup H = ambient;
  H.name = name;
  H.aschbacher = tag;
  H.gens.clear();
  H.order = ambient.order / orbit.size();
  RandomMatrices rnd(ambient.gens, 0xabcdef);
  for (int attempt = 0; attempt < 80; ++attempt) {
    Matrix g = rnd.next();
    std::size_t j = where.at(object_key(F, act(obj, g)));
    Matrix s = g * trans[j].inverse();
    if (s.is_scalar()) continue;
    H.gens.push_back(s);
    if (H.gens.size() < 2) continue;
    if (export_order(H, dom) == target) return H;
  }
  throw std::logic_error("stabilizer generation did not converge");
}

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec e(n, 0);
  e[i] = 1;
  return e;
}

MatGroup field_extension_subgroup(const MatGroup& ambient, std::size_t d) {
  std::size_t n = ambient.n;
  if (d < 2 || n % d) throw Error(Errc::unsupported_parameters, "extension degree must divide n");
  FieldPtr F = ambient.field;
  ExtField K(F, std::uint32_t(d));
  std::size_t r = n / d;
  auto blow = [&](const std::vector<std::vector<ExtField::elem>>& a) {
    Matrix m(F, n, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        ExtField::elem yl = K.one();
        for (std::size_t l = 0; l < d; ++l) {
          auto prod = K.mul(yl, a[i][j]);
          for (std::size_t c = 0; c < d; ++c) m(i * d + l, j * d + c) = prod[c];
          yl = K.mul(yl, K.gen());
        }
      }
    return m;
  };
  auto ident = [&]() {
    std::vector<std::vector<ExtField::elem>> a(r, std::vector<ExtField::elem>(r, K.zero()));
    for (std::size_t i = 0; i < r; ++i) a[i][i] = K.one();
    return a;
  };
  std::vector<Matrix> gens;
  auto diag = ident();
  diag[0][0] = K.primitive();
  gens.push_back(blow(diag));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      ExtField::elem yl = K.one();
      for (std::size_t l = 0; l < d; ++l) {
        auto a = ident();
        a[i][j] = yl;
        gens.push_back(blow(a));
        yl = K.mul(yl, K.gen());
      }
    }
  // the Frobenius x -> x^q on each coordinate
  Matrix phi(F, n, n);
  for (std::size_t b = 0; b < r; ++b) {
    ExtField::elem yl = K.one();
    for (std::size_t l = 0; l < d; ++l) {
      auto img = K.frob(yl, 1);
      for (std::size_t c = 0; c < d; ++c) phi(b * d + l, b * d + c) = img[c];
      yl = K.mul(yl, K.gen());
    }
  }
  gens.push_back(phi);
  MatGroup H = ambient;
  H.aschbacher = "C3";
  bigint gl = classical_order(Classical::GL, r, static_cast<std::uint64_t>(ipow(bigint(ambient.q), d)));
  if (ambient.family == Classical::SL) {
    H.gens = determinant_kernel(gens);
    H.order = gl * d / (ambient.q - 1);
  } else {
    H.gens = gens;
    H.order = gl * d;
  }
  H.name = "GammaL" + std::to_string(r) + "(" + std::to_string(ambient.q) + "^" + std::to_string(d) + ")";
  return H;
}

}  // namespace

MatGroup subgroup_construct(AschbacherKind kind, const SubgroupParams& prm) {
  if (kind == AschbacherKind::so_in_sp) {
    if (prm.q % 2) throw Error(Errc::unsupported_parameters, "SO in Sp needs q even");
    if (prm.epsilon != 1 && prm.epsilon != -1) throw Error(Errc::unsupported_parameters, "epsilon must be +1 or -1");
    MatGroup H = build_classical(prm.epsilon == 1 ? Classical::Oplus : Classical::Ominus, prm.n, prm.q);
    FormSpec sp = standard_symplectic(H.field, prm.n);
    for (const auto& g : H.gens)
      if (!preserves(g, sp)) throw std::logic_error("orthogonal generator outside Sp");
    H.name = std::string("SO") + std::to_string(prm.n) + (prm.epsilon == 1 ? "+" : "-") + "(" +
             std::to_string(prm.q) + ")";
    H.aschbacher = "C8";
    H.form = sp;
    H.family = Classical::Sp;
    return H;
  }
  MatGroup G = build_classical(prm.ambient, prm.n, prm.q);
  std::size_t n = prm.n;
  if (kind == AschbacherKind::field_extension) {
    if (prm.ambient != Classical::SL && prm.ambient != Classical::GL)
      throw Error(Errc::unsupported_parameters, "field-extension subgroups are built in SL and GL");
    return field_extension_subgroup(G, prm.k);
  }
  Object obj;
  std::string name;
  std::string tag;
  if (kind == AschbacherKind::subspace) {
    tag = "C1";
    std::size_t k = prm.k;
    if (k < 1 || k >= n) throw Error(Errc::unsupported_parameters, "subspace dimension out of range");
    std::vector<Vec> basis;
    if (prm.nondegenerate) {
      if (!G.form || k % 2) throw Error(Errc::unsupported_parameters, "nondegenerate subspaces need a form and even k");
      for (std::size_t i = 0; i < k / 2; ++i) {
        basis.push_back(basis_vec(n, i));
        basis.push_back(basis_vec(n, n - 1 - i));
      }
      name = "N" + std::to_string(k);
    } else {
      if (G.form && 2 * k > n) throw Error(Errc::unsupported_parameters, "totally singular subspace too large");
      for (std::size_t i = 0; i < k; ++i) basis.push_back(basis_vec(n, i));
      if (G.form && G.form->kind == FormKind::quadratic)
        for (const auto& v : basis)
          if (quad_value(G.form->gram, v)) throw Error(Errc::unsupported_parameters, "subspace is not totally singular");
      name = "P" + std::to_string(k);
    }
    obj.push_back(basis);
  } else {
    tag = "C2";
    if (prm.ambient != Classical::SL && prm.ambient != Classical::GL)
      throw Error(Errc::unsupported_parameters, "sum-stabilizers are built in SL and GL");
    std::size_t t = prm.k;
    if (t < 2 || n % t) throw Error(Errc::unsupported_parameters, "number of summands must divide n");
    std::size_t b = n / t;
    for (std::size_t i = 0; i < t; ++i) {
      std::vector<Vec> s;
      for (std::size_t j = 0; j < b; ++j) s.push_back(basis_vec(n, i * b + j));
      obj.push_back(s);
    }
    name = "GL" + std::to_string(b) + "(" + std::to_string(prm.q) + ")wrS" + std::to_string(t);
  }
  return object_stabilizer(G, obj, name, tag);
}

}  // namespace ncov
