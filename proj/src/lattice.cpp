#include "ncov/lattice.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "ncov/error.hpp"

namespace ncov {

namespace {

// One representative element per double coset HgH other than H itself.
std::vector<std::uint32_t> double_coset_reps(const ElementTable& T, const TableSubgroup& H) {
  CosetPartition P = left_cosets(T, H);
  const std::size_t m = P.reps.size();
  std::vector<char> seen(m, 0);
  std::vector<std::uint32_t> out;
  const std::uint32_t home = P.coset_of[T.identity_index()];
  seen[home] = 1;
  std::vector<std::uint32_t> queue;
  std::vector<std::uint32_t> hidx;
  for (const auto& h : H.gens) hidx.push_back(static_cast<std::uint32_t>(T.index_of(h)));
  for (std::uint32_t c = 0; c < m; ++c) {
    if (seen[c]) continue;
    seen[c] = 1;
    out.push_back(P.reps[c]);
    queue.assign(1, c);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Perm z = T.element(P.reps[queue[q]]);
      for (auto h : hidx) {
        // coset h z H
        std::uint32_t d = P.coset_of[T.right_mul(h, z)];
        if (!seen[d]) {
          seen[d] = 1;
          queue.push_back(d);
        }
      }
    }
  }
  return out;
}

std::vector<Perm> with(const std::vector<Perm>& gens, const Perm& g) {
  std::vector<Perm> out = gens;
  out.push_back(g);
  return out;
}

bool has_element(const TableSubgroup& H, std::uint32_t e) {
  return std::binary_search(H.elems.begin(), H.elems.end(), e);
}

}  // namespace

std::vector<SubgroupRecord> SubgroupLattice::records() const {
  std::vector<SubgroupRecord> out;
  for (const auto& c : classes) {
    SubgroupRecord r;
    r.label = c.label;
    r.gens = c.rep.gens;
    r.order = c.rep.order();
    r.is_maximal = c.is_maximal;
    out.push_back(std::move(r));
  }
  return out;
}

std::string guess_label(const ElementTable& T, const ConjClassTable& C, const TableSubgroup& H) {
  const std::uint64_t n = H.order();
  if (n == 1) return "1";
  std::map<std::uint64_t, std::uint64_t> ord_count;
  for (auto e : H.elems) ++ord_count[C.orders[C.class_of[e]]];
  if (ord_count.count(n)) return "C" + std::to_string(n);
  bool abelian = true;
  for (std::size_t i = 0; i < H.gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < H.gens.size() && abelian; ++j)
      if (H.gens[i] * H.gens[j] != H.gens[j] * H.gens[i]) abelian = false;
  if (abelian) {
    if (ord_count.size() == 2) return "E" + std::to_string(n);
    return "Ab" + std::to_string(n);
  }
  const std::uint64_t invol = ord_count.count(2) ? ord_count[2] : 0;
  if (n >= 6 && n % 2 == 0 && ord_count.count(n / 2)) {
    std::uint64_t expect = n / 2 + ((n / 2) % 2 == 0 ? 1 : 0);
    if (invol == expect) return n == 6 ? "S3" : "D" + std::to_string(n);
  }
  auto profile = [&](std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> p) {
    return ord_count == std::map<std::uint64_t, std::uint64_t>(p);
  };
  if (n == 12 && profile({{1, 1}, {2, 3}, {3, 8}})) return "A4";
  if (n == 24 && profile({{1, 1}, {2, 9}, {3, 8}, {4, 6}})) return "S4";
  if (n == 60 && profile({{1, 1}, {2, 15}, {3, 20}, {5, 24}})) return "A5";
  if (n == 120 && profile({{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}})) return "S5";
  if (n == 360 && profile({{1, 1}, {2, 45}, {3, 80}, {4, 90}, {5, 144}})) return "A6";
  if (n == 168 && profile({{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}})) return "L3(2)";
  if (n == 8 && invol == 1) return "Q8";
  (void)T;
  return "G" + std::to_string(n);
}

SubgroupLattice all_subgroups(const ElementTable& T, const ConjClassTable& C,
                              const LatticeOptions& opt) {
  const std::uint64_t n = T.size();
  const std::size_t deg = T.group().degree();
  const auto& conj = T.conj_tables();
  SubgroupLattice L;
  struct Node {
    std::int64_t parent;
    std::uint32_t gen;
  };
  std::vector<std::vector<Node>> nodes;  // per class: conjugates as paths from the rep
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> where;

  auto replay = [&](std::uint32_t cls, std::uint32_t node) {
    std::vector<std::uint32_t> word;
    for (auto w = static_cast<std::int64_t>(node); nodes[cls][w].parent >= 0;
         w = nodes[cls][w].parent)
      word.push_back(nodes[cls][w].gen);
    std::vector<std::uint32_t> e = L.classes[cls].rep.elems;
    for (auto it = word.rbegin(); it != word.rend(); ++it) e = conjugate_elements(T, e, *it);
    return e;
  };
  auto find = [&](const std::vector<std::uint32_t>& elems) -> std::int64_t {
    auto it = where.find(fingerprint(elems));
    if (it == where.end()) return -1;
    if (replay(it->second.first, it->second.second) != elems)
      throw Error(Errc::lattice_explosion, "fingerprint collision");
    return it->second.first;
  };
  auto add = [&](TableSubgroup H) -> std::uint32_t {
    if (L.classes.size() >= opt.class_limit)
      throw Error(Errc::lattice_explosion,
                  "more than " + std::to_string(opt.class_limit) + " subgroup classes");
    auto id = static_cast<std::uint32_t>(L.classes.size());
    std::vector<Node> nd{{-1, 0}};
    where[fingerprint(H.elems)] = {id, 0};
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> frontier{{0, H.elems}};
    while (!frontier.empty()) {
      decltype(frontier) next;
      for (auto& [node, elems] : frontier)
        for (std::uint32_t k = 0; k < conj.size(); ++k) {
          auto img = conjugate_elements(T, elems, k);
          std::uint64_t fp = fingerprint(img);
          if (where.count(fp)) continue;
          nd.push_back({static_cast<std::int64_t>(node), k});
          where[fp] = {id, static_cast<std::uint32_t>(nd.size() - 1)};
          next.emplace_back(static_cast<std::uint32_t>(nd.size() - 1), std::move(img));
        }
      frontier = std::move(next);
    }
    SubgroupClass sc;
    sc.length = nd.size();
    sc.rep = std::move(H);
    L.classes.push_back(std::move(sc));
    nodes.push_back(std::move(nd));
    return id;
  };

  add(make_subgroup(T, {}));
  for (std::size_t c = 1; c < C.size(); ++c) {
    auto H = make_subgroup(T, {C.reps[c]});
    if (find(H.elems) < 0) add(std::move(H));
  }
  std::vector<std::vector<std::uint32_t>> over;
  for (std::size_t i = 0; i < L.classes.size(); ++i) {
    over.emplace_back();
    const TableSubgroup H = L.classes[i].rep;
    if (H.order() == n) continue;
    if (H.order() == 1) {
      for (std::uint32_t j = 1; j < L.classes.size(); ++j) {
        std::uint64_t o = L.classes[j].rep.order();
        bool prime = o > 1;
        for (std::uint64_t d = 2; d * d <= o; ++d)
          if (o % d == 0) prime = false;
        if (prime && L.classes[j].rep.gens.size() == 1) over[i].push_back(j);
      }
      continue;
    }
    for (std::uint32_t g : double_coset_reps(T, H)) {
      auto gens = with(H.gens, T.element(g));
      if (group_order(gens, deg, n) == n) {
        over[i].push_back(0xffffffffu);
        continue;
      }
      auto elems = closure_indices(T, gens);
      std::int64_t id = find(elems);
      if (id < 0) {
        TableSubgroup K;
        K.gens = std::move(gens);
        K.elems = std::move(elems);
        id = add(std::move(K));
      }
      over[i].push_back(static_cast<std::uint32_t>(id));
    }
  }
  // the whole group as its own class
  if (L.classes.back().rep.order() != n) {
    std::int64_t id = -1;
    for (std::size_t i = 0; i < L.classes.size(); ++i)
      if (L.classes[i].rep.order() == n) id = static_cast<std::int64_t>(i);
    if (id < 0) {
      add(make_subgroup(T, T.group().generators()));
      over.emplace_back();
    }
  }
  const std::size_t m = L.classes.size();
  std::vector<std::uint32_t> full_id;
  for (std::size_t i = 0; i < m; ++i)
    if (L.classes[i].rep.order() == n) full_id.push_back(static_cast<std::uint32_t>(i));
  // transitive closure of the recorded one-step extensions
  std::vector<std::vector<char>> below(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (auto j : over[i]) {
      if (j == 0xffffffffu)
        below[i][full_id.front()] = 1;
      else
        below[i][j] = 1;
    }
    if (L.classes[i].rep.order() < n) below[i][full_id.front()] = 1;
  }
  std::vector<std::size_t> order_idx(m);
  for (std::size_t i = 0; i < m; ++i) order_idx[i] = i;
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    return L.classes[a].rep.order() > L.classes[b].rep.order();
  });
  for (std::size_t a : order_idx)
    for (std::size_t j = 0; j < m; ++j)
      if (below[a][j])
        for (std::size_t k = 0; k < m; ++k)
          if (below[j][k]) below[a][k] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    bool proper = L.classes[i].rep.order() < n;
    bool maximal = proper;
    for (auto j : over[i])
      if (j != 0xffffffffu && L.classes[j].rep.order() < n) maximal = false;
    L.classes[i].is_maximal = maximal;
  }
  // sort by order, keeping discovery order among equals
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return L.classes[a].rep.order() < L.classes[b].rep.order();
  });
  SubgroupLattice S;
  S.below.assign(m, std::vector<char>(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    S.classes.push_back(std::move(L.classes[perm[a]]));
    for (std::size_t b = 0; b < m; ++b) S.below[a][b] = below[perm[a]][perm[b]];
  }
  std::map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t a = 0; a < m; ++a) {
    S.classes[a].label = guess_label(T, C, S.classes[a].rep);
    by_label[S.classes[a].label].push_back(a);
  }
  for (auto& [lab, ids] : by_label)
    if (ids.size() > 1)
      for (std::size_t k = 0; k < ids.size(); ++k) {
        S.classes[ids[k]].label = lab + "_" + std::to_string(k + 1);
      }
  return S;
}

std::vector<SubgroupRecord> maximal_subgroups(const SubgroupLattice& L) {
  std::vector<SubgroupRecord> out;
  for (const auto& r : L.records())
    if (r.is_maximal) out.push_back(r);
  return out;
}

CosetView::CosetView(const ElementTable& T, TableSubgroup M) : T_(&T), M_(std::move(M)) {
  part_ = left_cosets(T, M_);
  home_ = part_.coset_of[T.identity_index()];
  for (auto r : part_.reps) {
    reps_.push_back(T.element(r));
    reps_inv_.push_back(reps_.back().inverse());
  }
}

bool CosetView::fixes(std::uint32_t coset, const Perm& x) const {
  std::int64_t e = T_->conj_index(x, reps_[coset], reps_inv_[coset]);
  return e >= 0 && contains(static_cast<std::uint32_t>(e));
}

std::vector<std::uint32_t> CosetView::fixed_cosets(const Perm& x) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < reps_.size(); ++k)
    if (fixes(k, x)) out.push_back(k);
  return out;
}

bool CosetView::common_conjugate(const std::vector<Perm>& gens) const {
  if (gens.empty()) return true;
  for (std::uint32_t k : fixed_cosets(gens.front())) {
    bool all = true;
    for (std::size_t i = 1; i < gens.size() && all; ++i) all = fixes(k, gens[i]);
    if (all) return true;
  }
  return false;
}

std::optional<TableSubgroup> proper_overgroup(const ElementTable& T, const TableSubgroup& H) {
  const std::uint64_t n = T.size();
  for (std::uint32_t g : double_coset_reps(T, H)) {
    auto gens = with(H.gens, T.element(g));
    if (group_order(gens, T.group().degree(), n) < n) return make_subgroup(T, std::move(gens));
  }
  return std::nullopt;
}

bool is_maximal_subgroup(const ElementTable& T, const TableSubgroup& H) {
  if (H.order() >= T.size()) return false;
  return !proper_overgroup(T, H).has_value();
}

TableSubgroup extend_to_maximal(const ElementTable& T, TableSubgroup H, std::uint64_t seed) {
  const std::uint64_t n = T.size();
  std::mt19937_64 rng(seed);
  int fails = 0;
  while (fails < 30) {
    Perm g = T.group().random_element(rng);
    std::uint32_t gi = static_cast<std::uint32_t>(T.index_of(g));
    if (has_element(H, gi)) continue;
    auto gens = with(H.gens, g);
    if (group_order(gens, T.group().degree(), n) < n) {
      H = make_subgroup(T, std::move(gens));
      fails = 0;
    } else {
      ++fails;
    }
  }
  while (auto bigger = proper_overgroup(T, H)) H = std::move(*bigger);
  return H;
}

std::vector<TableSubgroup> search_maximal_subgroups(const ElementTable& T, const ConjClassTable& C,
                                                   const MaximalSearchOptions& opt) {
  const std::uint64_t n = T.size();
  const std::size_t deg = T.group().degree();
  std::mt19937_64 rng(opt.seed);
  std::vector<CosetView> views;
  std::vector<TableSubgroup> found;
  for (std::size_t c = 1; c < C.size(); ++c) {
    const Perm& x = C.reps[c];
    std::vector<std::vector<std::uint32_t>> fx;
    for (const auto& v : views) fx.push_back(v.fixed_cosets(x));
    for (std::size_t t = 0; t < opt.pairs_per_class; ++t) {
      Perm y = T.group().random_element(rng);
      bool covered = false;
      for (std::size_t v = 0; v < views.size() && !covered; ++v)
        for (auto z : fx[v])
          if (views[v].fixes(z, y)) {
            covered = true;
            break;
          }
      if (covered) continue;
      if (group_order({x, y}, deg, n) == n) continue;
      TableSubgroup M = extend_to_maximal(T, make_subgroup(T, {x, y}), rng());
      bool known = false;
      for (const auto& v : views)
        if (v.subgroup().order() == M.order() && v.common_conjugate(M.gens)) known = true;
      if (known) continue;
      if (opt.log)
        opt.log("maximal subgroup of order " + std::to_string(M.order()) + " from class " +
                C.names[c]);
      views.emplace_back(T, M);
      fx.push_back(views.back().fixed_cosets(x));
      found.push_back(std::move(M));
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const TableSubgroup& a, const TableSubgroup& b) {
    return a.order() > b.order();
  });
  return found;
}

}  // namespace ncov
