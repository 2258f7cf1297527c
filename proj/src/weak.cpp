#include "ncov/weak.hpp"

#include <numeric>

#include "ncov/error.hpp"

namespace ncov {

AutContext make_aut_context(PermGroup A, const std::vector<Perm>& socle_gens) {
  AutContext ctx;
  ctx.G = PermGroup(socle_gens, A.degree(), A.order());
  for (const auto& g : socle_gens)
    if (!A.contains(g)) throw Error(Errc::not_a_member, "socle generator outside the overgroup");
  for (const auto& a : A.generators())
    for (const auto& g : socle_gens)
      if (!ctx.G.contains(conjugate(g, a)))
        throw Error(Errc::not_normal, "socle is not normalized by " + a.to_string());
  ctx.transversal.push_back(A.identity());
  for (std::size_t i = 0; i < ctx.transversal.size(); ++i)
    for (const auto& a : A.generators()) {
      Perm t = ctx.transversal[i] * a;
      bool known = false;
      for (const auto& r : ctx.transversal)
        if (ctx.G.contains(r.inverse() * t)) {
          known = true;
          break;
        }
      if (!known) ctx.transversal.push_back(t);
    }
  if (ctx.transversal.size() * ctx.G.order() != A.order())
    throw Error(Errc::not_normal, "transversal size does not match |A:G|");
  ctx.A = std::move(A);
  return ctx;
}

FusionMap fuse_classes(const AutContext& ctx, const ElementTable& T, const ConjClassTable& C) {
  std::vector<std::uint32_t> parent(C.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < C.size(); ++c)
    for (const auto& a : ctx.A.generators()) {
      std::int64_t idx = T.index_of(conjugate(C.reps[c], a));
      if (idx < 0) throw Error(Errc::not_normal, "class image outside the socle");
      std::uint32_t d = C.class_of[idx];
      std::uint32_t x = find(static_cast<std::uint32_t>(c)), y = find(d);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  FusionMap F;
  F.aut_class_of.assign(C.size(), 0);
  std::vector<std::int64_t> id(C.size(), -1);
  for (std::size_t c = 0; c < C.size(); ++c) {
    auto r = find(static_cast<std::uint32_t>(c));
    if (id[r] < 0) {
      id[r] = static_cast<std::int64_t>(F.members.size());
      F.members.emplace_back();
    }
    F.aut_class_of[c] = static_cast<std::uint32_t>(id[r]);
    F.members[id[r]].push_back(static_cast<std::uint32_t>(c));
  }
  return F;
}

std::vector<std::uint32_t> subgroup_orbits(const AutContext& ctx, const ElementTable& T,
                                           const ConjClassTable& C,
                                           const std::vector<SubgroupRecord>& subgroups) {
  const std::size_t m = subgroups.size();
  std::vector<TableSubgroup> tab;
  for (const auto& s : subgroups) tab.push_back(make_subgroup(T, s.gens));
  std::vector<std::uint32_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& a : ctx.A.generators()) {
      std::vector<Perm> img;
      for (const auto& g : subgroups[j].gens) img.push_back(conjugate(g, a));
      TableSubgroup Ha = make_subgroup(T, img);
      std::int64_t hit = -1;
      for (std::size_t k = 0; k < m && hit < 0; ++k) {
        if (tab[k].order() != Ha.order()) continue;
        if (is_subgroup_conjugate(T, C, Ha, tab[k])) hit = static_cast<std::int64_t>(k);
      }
      if (hit < 0)
        throw Error(Errc::not_normal,
                    "image of " + subgroups[j].label + " is not among the listed subgroup classes");
      std::uint32_t x = find(static_cast<std::uint32_t>(j)), y = find(static_cast<std::uint32_t>(hit));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  std::vector<std::uint32_t> out(m);
  std::vector<std::int64_t> id(m, -1);
  std::uint32_t next = 0;
  for (std::size_t j = 0; j < m; ++j) {
    auto r = find(static_cast<std::uint32_t>(j));
    if (id[r] < 0) id[r] = next++;
    out[j] = static_cast<std::uint32_t>(id[r]);
  }
  return out;
}

WeakInstance build_weak(const AutContext& ctx, const ElementTable& T, const ConjClassTable& C,
                        const std::vector<SubgroupRecord>& maximal, bool all_maximal) {
  WeakInstance W;
  W.inst = incidence_matrix(T, C, maximal);
  if (all_maximal)
    for (auto& s : W.inst.subgroups) s.is_maximal = true;
  W.fusion = fuse_classes(ctx, T, C);
  W.orbit_of = subgroup_orbits(ctx, T, C, maximal);
  std::size_t norb = 0;
  for (auto o : W.orbit_of) norb = std::max<std::size_t>(norb, o + 1);
  W.orbits.assign(norb, {});
  for (std::size_t j = 0; j < W.orbit_of.size(); ++j) W.orbits[W.orbit_of[j]].push_back(j);
  W.aut_meets.assign(W.fusion.size(), std::vector<char>(norb, 0));
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = 0; j < maximal.size(); ++j)
      if (W.inst.meets[i][j]) W.aut_meets[W.fusion.aut_class_of[i]][W.orbit_of[j]] = 1;
  return W;
}

bool WeakInstance::orbit_pair_covers(std::size_t a, std::size_t b) const {
  for (const auto& row : aut_meets)
    if (!row[a] && !row[b]) return false;
  return true;
}

std::size_t weak_covering_number(const WeakInstance& W) {
  if (W.inst.is_cyclic()) throw Error(Errc::cyclic_group, "a cyclic group admits no normal covering");
  const std::size_t rows = W.aut_meets.size();
  std::vector<Bits> cols(W.orbits.size(), Bits(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t o = 0; o < W.orbits.size(); ++o)
      if (W.aut_meets[i][o] && W.inst.subgroups[W.orbits[o].front()].order < W.inst.group_order)
        cols[o].set(i);
  Bits all(rows);
  for (std::size_t i = 0; i < rows; ++i) all.set(i);
  auto best = min_set_cover(cols, all);
  if (!best) throw Error(Errc::unsupported_parameters, "maximal subgroups do not cover the group");
  return best->size();
}

Graph aut_invariable_graph(const WeakInstance& W) {
  std::vector<std::size_t> verts;
  std::vector<std::vector<char>> rows(W.aut_meets.size());
  for (std::size_t a = 0; a < W.fusion.size(); ++a) {
    auto c = W.fusion.members[a].front();
    if (W.inst.class_orders[c] != 1) verts.push_back(a);
    for (std::size_t o = 0; o < W.orbits.size(); ++o)
      if (W.inst.subgroups[W.orbits[o].front()].is_maximal) rows[a].push_back(W.aut_meets[a][o]);
  }
  return graph_from_rows(rows, verts);
}

PairCount count_normal_in_aut_class(const WeakInstance& W, std::size_t colH, std::size_t colK) {
  const std::size_t oh = W.orbit_of[colH], ok = W.orbit_of[colK];
  if (!W.orbit_pair_covers(oh, ok))
    throw Error(Errc::not_a_weak_covering,
                W.inst.subgroups[colH].label + ", " + W.inst.subgroups[colK].label);
  PairCount pc;
  pc.h = W.orbits[oh].size();
  pc.k = W.orbits[ok].size();
  if (oh == ok) {
    const auto& o = W.orbits[oh];
    for (std::size_t x = 0; x < o.size(); ++x)
      for (std::size_t y = x + 1; y < o.size(); ++y)
        if (is_normal_covering(W.inst, {o[x], o[y]})) ++pc.C;
  } else {
    for (auto x : W.orbits[oh])
      for (auto y : W.orbits[ok])
        if (is_normal_covering(W.inst, {x, y})) ++pc.C;
  }
  const std::size_t mx = std::max(pc.h, pc.k);
  pc.invariants_hold = pc.C <= pc.h * pc.k && (pc.C == 0 || pc.C % mx == 0);
  return pc;
}

std::vector<WeakPair> weak_2coverings(const WeakInstance& W, bool restrict_maximal) {
  std::vector<WeakPair> out;
  auto usable = [&](std::size_t o) {
    const auto& rec = W.inst.subgroups[W.orbits[o].front()];
    return rec.order < W.inst.group_order && (!restrict_maximal || rec.is_maximal);
  };
  // two members of one orbit never cover: their A-conjugates are those of one subgroup
  for (std::size_t a = 0; a < W.orbits.size(); ++a)
    for (std::size_t b = a + 1; b < W.orbits.size(); ++b)
      if (usable(a) && usable(b) && W.orbit_pair_covers(a, b))
        out.push_back({a, b, count_normal_in_aut_class(W, W.orbits[a].front(), W.orbits[b].front())});
  return out;
}

std::vector<TableSubgroup> close_under_aut(const AutContext& ctx, const ElementTable& T,
                                           const ConjClassTable& C,
                                           std::vector<TableSubgroup> subs) {
  for (std::size_t j = 0; j < subs.size(); ++j)
    for (const auto& a : ctx.A.generators()) {
      std::vector<Perm> img;
      for (const auto& g : subs[j].gens) img.push_back(conjugate(g, a));
      TableSubgroup Ha = make_subgroup(T, img);
      bool known = false;
      for (std::size_t k = 0; k < subs.size() && !known; ++k)
        known = subs[k].order() == Ha.order() && is_subgroup_conjugate(T, C, Ha, subs[k]).has_value();
      if (!known) subs.push_back(std::move(Ha));
    }
  return subs;
}

}  // namespace ncov
