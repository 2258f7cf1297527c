#include "ncov/covering.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "ncov/error.hpp"

namespace ncov {

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool Bits::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

bool Bits::covers(const Bits& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (o.w_[i] & ~w_[i]) return false;
  return true;
}

bool Bits::intersects(const Bits& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (o.w_[i] & w_[i]) return true;
  return false;
}

Bits& Bits::operator|=(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bits& Bits::operator&=(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bits CoverInstance::column(std::size_t j) const {
  Bits b(nclasses());
  for (std::size_t i = 0; i < nclasses(); ++i)
    if (meets[i][j]) b.set(i);
  return b;
}

bool CoverInstance::is_cyclic() const {
  for (auto o : class_orders)
    if (o == group_order) return true;
  return false;
}

namespace {

CoverInstance skeleton(const ElementTable& T, const ConjClassTable& C) {
  CoverInstance inst;
  inst.group_order = T.size();
  inst.class_sizes = C.sizes;
  inst.class_orders = C.orders;
  return inst;
}

}  // namespace

CoverInstance incidence_matrix(const ElementTable& T, const ConjClassTable& C,
                               const std::vector<SubgroupRecord>& subgroups) {
  CoverInstance inst = skeleton(T, C);
  inst.subgroups = subgroups;
  inst.meets.assign(C.size(), std::vector<char>(subgroups.size(), 0));
  for (std::size_t j = 0; j < subgroups.size(); ++j) {
    auto elems = closure_indices(T, subgroups[j].gens);
    if (subgroups[j].order && elems.size() != subgroups[j].order)
      throw Error(Errc::checksum_mismatch, subgroups[j].label + ": order mismatch");
    inst.subgroups[j].order = elems.size();
    for (auto e : elems) inst.meets[C.class_of[e]][j] = 1;
  }
  return inst;
}

CoverInstance incidence_matrix(const ElementTable& T, const ConjClassTable& C,
                               const SubgroupLattice& L, bool proper_only) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < L.classes.size(); ++i)
    if (!proper_only || L.classes[i].rep.order() < T.size()) keep.push_back(i);
  CoverInstance inst = skeleton(T, C);
  auto recs = L.records();
  inst.meets.assign(C.size(), std::vector<char>(keep.size(), 0));
  inst.below.assign(keep.size(), std::vector<char>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    inst.subgroups.push_back(recs[keep[a]]);
    for (auto e : L.classes[keep[a]].rep.elems) inst.meets[C.class_of[e]][a] = 1;
    for (std::size_t b = 0; b < keep.size(); ++b) inst.below[a][b] = L.below[keep[a]][keep[b]];
  }
  return inst;
}

std::vector<std::vector<char>> incidence_by_characters(const ElementTable& T,
                                                       const ConjClassTable& C,
                                                       const std::vector<SubgroupRecord>& subgroups) {
  std::vector<std::vector<char>> meets(C.size(), std::vector<char>(subgroups.size(), 0));
  for (std::size_t j = 0; j < subgroups.size(); ++j) {
    auto H = make_subgroup(T, subgroups[j].gens);
    auto pi = permutation_character(T, C, H);
    for (std::size_t i = 0; i < C.size(); ++i) meets[i][j] = pi[i] > 0;
  }
  return meets;
}

bool is_normal_covering(const CoverInstance& inst, const std::vector<std::size_t>& selected) {
  if (selected.empty()) return false;
  for (auto j : selected)
    if (inst.subgroups[j].order >= inst.group_order)
      throw Error(Errc::improper_component, inst.subgroups[j].label + " is the whole group");
  for (std::size_t i = 0; i < inst.nclasses(); ++i) {
    bool hit = false;
    for (auto j : selected) hit = hit || inst.meets[i][j];
    if (!hit) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> min_set_cover(const std::vector<Bits>& columns,
                                                      const Bits& universe) {
  const std::size_t m = columns.size();
  {
    Bits all(universe.size());
    for (const auto& c : columns) all |= c;
    if (!all.covers(universe)) return std::nullopt;
  }
  // exhaustive by size
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::size_t> pick(k);
    std::function<bool(std::size_t, std::size_t, const Bits&)> rec =
        [&](std::size_t depth, std::size_t from, const Bits& acc) -> bool {
      if (depth == k) return acc.covers(universe);
      for (std::size_t j = from; j + (k - depth) <= m; ++j) {
        Bits next = acc;
        next |= columns[j];
        pick[depth] = j;
        if (rec(depth + 1, j + 1, next)) return true;
      }
      return false;
    };
    if (rec(0, 0, Bits(universe.size()))) return pick;
  }
  return std::nullopt;
}

namespace {

std::vector<std::size_t> maximal_columns(const CoverInstance& inst) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < inst.subgroups.size(); ++j)
    if (inst.subgroups[j].is_maximal) cols.push_back(j);
  return cols;
}

Bits full(std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i);
  return b;
}

}  // namespace

std::vector<std::size_t> minimum_covering(const CoverInstance& inst) {
  if (inst.is_cyclic()) throw Error(Errc::cyclic_group, "a cyclic group admits no normal covering");
  auto cols = maximal_columns(inst);
  std::vector<Bits> bits;
  for (auto j : cols) bits.push_back(inst.column(j));
  auto best = min_set_cover(bits, full(inst.nclasses()));
  if (!best) throw Error(Errc::unsupported_parameters, "maximal subgroups do not cover the group");
  std::vector<std::size_t> out;
  for (auto k : *best) out.push_back(cols[k]);
  return out;
}

std::size_t covering_number(const CoverInstance& inst) { return minimum_covering(inst).size(); }

std::vector<CoveringPair> enumerate_2coverings(const CoverInstance& inst, bool restrict_maximal) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < inst.subgroups.size(); ++j) {
    if (inst.subgroups[j].order >= inst.group_order) continue;
    if (restrict_maximal && !inst.subgroups[j].is_maximal) continue;
    cols.push_back(j);
  }
  std::vector<Bits> bits(inst.subgroups.size());
  for (auto j : cols) bits[j] = inst.column(j);
  const Bits all = full(inst.nclasses());
  auto covers = [&](std::size_t a, std::size_t b) {
    Bits u = bits[a];
    u |= bits[b];
    return u.covers(all);
  };
  std::vector<CoveringPair> out;
  for (std::size_t x = 0; x < cols.size(); ++x)
    for (std::size_t y = x + 1; y < cols.size(); ++y) {
      std::size_t h = cols[x], k = cols[y];
      if (!covers(h, k)) continue;
      CoveringPair p{h, k, true};
      if (!inst.below.empty()) {
        for (auto s : cols) {
          if (s != h && inst.below[s][h] && covers(s, k)) p.minimal = false;
          if (s != k && inst.below[s][k] && covers(h, s)) p.minimal = false;
        }
      }
      out.push_back(p);
    }
  return out;
}

Graph graph_from_rows(const std::vector<std::vector<char>>& meets_rows,
                      const std::vector<std::size_t>& vertices) {
  Graph g;
  g.vertices = vertices;
  const std::size_t n = vertices.size();
  g.adj.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& ra = meets_rows[vertices[a]];
      const auto& rb = meets_rows[vertices[b]];
      bool shared = false;
      for (std::size_t m = 0; m < ra.size() && !shared; ++m) shared = ra[m] && rb[m];
      if (!shared) {
        g.adj[a].set(b);
        g.adj[b].set(a);
      }
    }
  return g;
}

Graph invariable_graph(const CoverInstance& inst) {
  auto cols = maximal_columns(inst);
  std::vector<std::vector<char>> rows(inst.nclasses());
  std::vector<std::size_t> verts;
  for (std::size_t i = 0; i < inst.nclasses(); ++i) {
    for (auto j : cols) rows[i].push_back(inst.meets[i][j]);
    if (inst.class_orders[i] != 1) verts.push_back(i);
  }
  return graph_from_rows(rows, verts);
}

std::vector<std::size_t> max_clique(const Graph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> best, cur;
  // Bron-Kerbosch with pivoting, pruned by |cur| + |P| <= |best|
  std::function<void(Bits, Bits)> bk = [&](Bits P, Bits X) {
    if (!P.any() && !X.any()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    if (cur.size() + P.count() <= best.size()) return;
    std::size_t pivot = n, pivot_deg = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (!P.test(u) && !X.test(u)) continue;
      Bits t = P;
      t &= g.adj[u];
      if (pivot == n || t.count() > pivot_deg) {
        pivot = u;
        pivot_deg = t.count();
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!P.test(v) || (pivot < n && g.adj[pivot].test(v))) continue;
      cur.push_back(v);
      Bits P2 = P, X2 = X;
      P2 &= g.adj[v];
      X2 &= g.adj[v];
      bk(P2, X2);
      cur.pop_back();
      // move v from P to X
      Bits one(n);
      one.set(v);
      Bits notv(n);
      for (std::size_t w = 0; w < n; ++w)
        if (w != v) notv.set(w);
      P &= notv;
      X |= one;
    }
  };
  Bits P(n);
  for (std::size_t v = 0; v < n; ++v) P.set(v);
  bk(P, Bits(n));
  std::vector<std::size_t> out;
  for (auto v : best) out.push_back(g.vertices[v]);
  return out;
}

std::size_t clique_number(const Graph& g) { return max_clique(g).size(); }

}  // namespace ncov
