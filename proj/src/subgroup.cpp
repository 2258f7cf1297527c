#include "ncov/subgroup.hpp"

#include <algorithm>
#include <unordered_map>

#include "ncov/error.hpp"

namespace ncov {

std::vector<std::uint32_t> closure_indices(const ElementTable& T, const std::vector<Perm>& gens) {
  thread_local Marks marks(0);
  thread_local std::size_t marks_n = 0;
  if (marks_n != T.size()) {
    marks = Marks(T.size());
    marks_n = T.size();
  }
  marks.clear();
  std::vector<std::uint32_t> out{T.identity_index()};
  marks.set(T.identity_index());
  for (std::size_t q = 0; q < out.size(); ++q)
    for (const auto& g : gens) {
      std::uint32_t y = T.right_mul(out[q], g);
      if (!marks.test(y)) {
        marks.set(y);
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

TableSubgroup make_subgroup(const ElementTable& T, std::vector<Perm> gens) {
  TableSubgroup H;
  H.elems = closure_indices(T, gens);
  H.gens = std::move(gens);
  return H;
}

std::uint64_t zobrist_key(std::uint32_t idx) {
  std::uint64_t z = idx + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fingerprint(const std::vector<std::uint32_t>& elems) {
  std::uint64_t h = 0;
  for (auto e : elems) h += zobrist_key(e);
  return h;
}

std::vector<char> classes_met(const ConjClassTable& C, const std::vector<std::uint32_t>& elems) {
  std::vector<char> met(C.size(), 0);
  for (auto e : elems) met[C.class_of[e]] = 1;
  return met;
}

std::vector<std::uint64_t> class_distribution(const ConjClassTable& C,
                                              const std::vector<std::uint32_t>& elems) {
  std::vector<std::uint64_t> d(C.size(), 0);
  for (auto e : elems) ++d[C.class_of[e]];
  return d;
}

std::vector<std::uint32_t> conjugate_elements(const ElementTable& T,
                                              const std::vector<std::uint32_t>& elems,
                                              std::size_t k) {
  const auto& tab = T.conj_tables()[k];
  std::vector<std::uint32_t> out(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) out[i] = tab[elems[i]];
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Perm> is_subgroup_conjugate(const ElementTable& T, const ConjClassTable& C,
                                          const TableSubgroup& H, const TableSubgroup& K) {
  if (H.order() != K.order()) return std::nullopt;
  if (class_distribution(C, H.elems) != class_distribution(C, K.elems)) return std::nullopt;
  if (H.elems == K.elems) return T.group().identity();
  // Breadth-first walk over the conjugates of H; visited conjugates are
  // remembered by fingerprint, the target is confirmed element by element.
  const std::uint64_t target = fingerprint(K.elems);
  std::vector<std::pair<std::int64_t, std::uint32_t>> parent{{-1, 0}};
  std::unordered_map<std::uint64_t, std::size_t> seen{{fingerprint(H.elems), 0}};
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> frontier{{0, H.elems}};
  auto witness = [&](std::size_t z) {
    std::vector<std::uint32_t> word;
    for (auto w = static_cast<std::int64_t>(z); parent[w].first >= 0; w = parent[w].first)
      word.push_back(parent[w].second);
    Perm g = T.group().identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) g *= T.group().generators()[*it];
    return g;
  };
  while (!frontier.empty()) {
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> next;
    for (auto& [node, elems] : frontier) {
      for (std::uint32_t k = 0; k < T.ngens(); ++k) {
        auto img = conjugate_elements(T, elems, k);
        std::uint64_t fp = fingerprint(img);
        if (seen.count(fp)) continue;
        parent.emplace_back(static_cast<std::int64_t>(node), k);
        seen.emplace(fp, parent.size() - 1);
        if (fp == target && img == K.elems) return witness(parent.size() - 1);
        next.emplace_back(parent.size() - 1, std::move(img));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

CosetPartition left_cosets(const ElementTable& T, const TableSubgroup& H) {
  std::vector<Perm> hs;
  hs.reserve(H.elems.size());
  for (auto e : H.elems) hs.push_back(T.element(e));
  CosetPartition P;
  P.coset_of.assign(T.size(), 0xffffffffu);
  for (std::uint32_t x = 0; x < T.size(); ++x) {
    if (P.coset_of[x] != 0xffffffffu) continue;
    auto id = static_cast<std::uint32_t>(P.reps.size());
    P.reps.push_back(x);
    for (const auto& h : hs) P.coset_of[T.right_mul(x, h)] = id;
  }
  return P;
}

std::vector<Perm> coset_action(const ElementTable& T, const CosetPartition& P) {
  std::vector<Perm> out;
  const std::size_t m = P.reps.size();
  if (m > 65535) throw Error(Errc::degree_too_large, "coset action of degree " + std::to_string(m));
  for (std::size_t k = 0; k < T.ngens(); ++k) {
    std::vector<point_t> img(m);
    for (std::size_t c = 0; c < m; ++c)
      img[c] = static_cast<point_t>(P.coset_of[T.left_mul_gen_inv(k, P.reps[c])]);
    out.emplace_back(std::move(img));
  }
  return out;
}

std::vector<std::uint64_t> permutation_character(const ElementTable& T, const ConjClassTable& C,
                                                 const TableSubgroup& H,
                                                 std::uint64_t index_bound) {
  const std::uint64_t index = T.size() / H.order();
  if (index > index_bound)
    throw Error(Errc::index_too_large, "index " + std::to_string(index));
  CosetPartition P = left_cosets(T, H);
  std::vector<std::uint64_t> chi(C.size(), 0);
  // coset zH is fixed by c iff c^-1 z H = z H
  for (std::size_t c = 0; c < C.size(); ++c) {
    Perm cinv = C.reps[c].inverse();
    for (std::size_t k = 0; k < P.reps.size(); ++k)
      if (P.coset_of[T.left_mul(cinv, P.reps[k])] == k) ++chi[c];
  }
  return chi;
}

std::vector<std::uint64_t> permutation_character_by_count(const ElementTable& T,
                                                          const ConjClassTable& C,
                                                          const TableSubgroup& H) {
  auto d = class_distribution(C, H.elems);
  std::vector<std::uint64_t> chi(C.size());
  for (std::size_t c = 0; c < C.size(); ++c)
    chi[c] = C.centralizer_order(c, T.size()) * d[c] / H.order();
  return chi;
}

}  // namespace ncov
