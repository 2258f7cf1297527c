#include "ncov/classes.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "ncov/error.hpp"

namespace ncov {

ConjClassTable conjugacy_classes(const ElementTable& T) {
  const std::size_t n = T.size();
  const auto& conj = T.conj_tables();
  constexpr std::uint32_t unset = 0xffffffffu;
  std::vector<std::uint32_t> orbit_of(n, unset);
  struct Raw {
    std::uint32_t first;
    std::uint64_t size;
    std::uint64_t order;
  };
  std::vector<Raw> raw;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (orbit_of[i] != unset) continue;
    auto id = static_cast<std::uint32_t>(raw.size());
    queue.assign(1, i);
    orbit_of[i] = id;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& tab : conj) {
        std::uint32_t y = tab[queue[q]];
        if (orbit_of[y] == unset) {
          orbit_of[y] = id;
          queue.push_back(y);
        }
      }
    raw.push_back({i, queue.size(), T.element_order(i)});
  }
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].order != raw[b].order) return raw[a].order < raw[b].order;
    if (raw[a].size != raw[b].size) return raw[a].size < raw[b].size;
    return raw[a].first < raw[b].first;
  });
  std::vector<std::uint32_t> newid(raw.size());
  ConjClassTable C;
  std::uint64_t last_order = 0;
  int letter = 0;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const Raw& r = raw[perm[k]];
    newid[perm[k]] = static_cast<std::uint32_t>(k);
    C.reps.push_back(T.element(r.first));
    C.rep_index.push_back(r.first);
    C.sizes.push_back(r.size);
    C.orders.push_back(r.order);
    letter = (r.order == last_order) ? letter + 1 : 0;
    last_order = r.order;
    std::string name = std::to_string(r.order);
    if (letter < 26) {
      name += static_cast<char>('A' + letter);
    } else {
      name += "_" + std::to_string(letter);
    }
    C.names.push_back(name);
  }
  C.class_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) C.class_of[i] = newid[orbit_of[i]];
  return C;
}

std::optional<Perm> are_conjugate(const ElementTable& T, const ConjClassTable& C, const Perm& x,
                                  const Perm& y) {
  std::int64_t ix = T.index_of(x), iy = T.index_of(y);
  if (ix < 0 || iy < 0) throw Error(Errc::not_a_member, "element not in group");
  if (C.class_of[ix] != C.class_of[iy]) return std::nullopt;
  if (ix == iy) return T.group().identity();
  // BFS over the class remembering how each element was reached
  const auto& conj = T.conj_tables();
  std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> parent;
  parent.emplace(static_cast<std::uint32_t>(ix), std::make_pair(0xffffffffu, 0u));
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(ix)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::uint32_t cur = queue[q];
    for (std::uint32_t k = 0; k < conj.size(); ++k) {
      std::uint32_t nxt = conj[k][cur];
      if (parent.count(nxt)) continue;
      parent.emplace(nxt, std::make_pair(cur, k));
      if (nxt == static_cast<std::uint32_t>(iy)) {
        std::vector<std::uint32_t> word;
        for (std::uint32_t z = nxt; parent[z].first != 0xffffffffu; z = parent[z].first)
          word.push_back(parent[z].second);
        Perm g = T.group().identity();
        for (auto it = word.rbegin(); it != word.rend(); ++it) g *= T.group().generators()[*it];
        return g;
      }
      queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

std::optional<Perm> are_conjugate_by_orbit(const PermGroup& G, const Perm& x, const Perm& y,
                                           std::uint64_t limit) {
  if (!G.contains(x) || !G.contains(y)) throw Error(Errc::not_a_member, "element not in group");
  if (x.cycle_type() != y.cycle_type()) return std::nullopt;
  if (x == y) return G.identity();
  std::unordered_map<Perm, std::pair<std::int64_t, std::uint32_t>, PermHash> parent;
  std::vector<Perm> queue{x};
  parent.emplace(x, std::make_pair(-1, 0u));
  const auto& gens = G.generators();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::uint32_t k = 0; k < gens.size(); ++k) {
      Perm nxt = conjugate(queue[q], gens[k]);
      if (parent.count(nxt)) continue;
      parent.emplace(nxt, std::make_pair(static_cast<std::int64_t>(q), k));
      if (nxt == y) {
        std::vector<std::uint32_t> word{k};
        for (std::int64_t z = static_cast<std::int64_t>(q); z > 0;) {
          auto pr = parent.at(queue[z]);
          word.push_back(pr.second);
          z = pr.first;
        }
        Perm g = G.identity();
        for (auto it = word.rbegin(); it != word.rend(); ++it) g *= gens[*it];
        return g;
      }
      if (queue.size() >= limit)
        throw Error(Errc::group_too_large, "conjugacy class exceeds search limit");
      queue.push_back(std::move(nxt));
    }
  }
  return std::nullopt;
}

std::uint64_t centralizer_order(const ElementTable& T, const ConjClassTable& C, const Perm& x) {
  std::int64_t ix = T.index_of(x);
  if (ix < 0) throw Error(Errc::not_a_member, "element not in group");
  return T.group().order() / C.sizes[C.class_of[ix]];
}

}  // namespace ncov
