#include "ncov/group.hpp"

#include <algorithm>
#include <deque>

#include "ncov/error.hpp"

namespace ncov {

namespace {

// Product-replacement random elements; deterministic seed.
class ProductReplacement {
 public:
  ProductReplacement(const std::vector<Perm>& gens, std::size_t degree, std::uint64_t seed)
      : rng_(seed) {
    if (gens.empty()) {
      slots_.assign(2, Perm(degree));
    } else {
      while (slots_.size() < 10)
        for (const auto& g : gens) slots_.push_back(g);
    }
    acc_ = Perm(degree);
    for (int i = 0; i < 50; ++i) next();
  }

  Perm next() {
    std::uniform_int_distribution<std::size_t> d(0, slots_.size() - 1);
    std::size_t i = d(rng_), j = d(rng_);
    while (j == i && slots_.size() > 1) j = d(rng_);
    if (rng_() & 1)
      slots_[i] = slots_[i] * slots_[j];
    else
      slots_[i] = slots_[j] * slots_[i];
    acc_ = acc_ * slots_[i];
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Perm> slots_;
  Perm acc_;
};

}  // namespace

PermGroup::PermGroup(std::vector<Perm> gens, std::size_t degree, std::uint64_t order_hint,
                     const std::vector<point_t>& base_prefix)
    : degree_(degree), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw Error(Errc::degree_mismatch, "generator of degree " + std::to_string(g.degree()) +
                                             " in group of degree " + std::to_string(degree_));
  build(order_hint, base_prefix);
}

PermGroup::PermGroup(std::vector<Perm> gens) {
  if (gens.empty()) throw Error(Errc::degree_mismatch, "empty generator list without degree");
  degree_ = gens.front().degree();
  gens_ = std::move(gens);
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw Error(Errc::degree_mismatch, "mixed generator degrees");
  build(0, {});
}

std::vector<point_t> PermGroup::base() const {
  std::vector<point_t> b;
  for (const auto& l : levels_) b.push_back(l.point);
  return b;
}

void PermGroup::recompute_level(std::size_t i) {
  ChainLevel& L = levels_[i];
  L.pos.assign(degree_, -1);
  L.orbit.clear();
  L.rep.clear();
  L.rep_inv.clear();
  L.orbit.push_back(L.point);
  L.pos[L.point] = 0;
  L.rep.push_back(Perm(degree_));
  L.rep_inv.push_back(Perm(degree_));
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    for (const auto& s : L.gens) {
      point_t y = s[L.orbit[k]];
      if (L.pos[y] >= 0) continue;
      L.pos[y] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(y);
      Perm r = L.rep[k] * s;
      L.rep_inv.push_back(r.inverse());
      L.rep.push_back(std::move(r));
    }
  }
}

std::size_t PermGroup::sift(Perm& g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const ChainLevel& L = levels_[i];
    point_t b = g[L.point];
    std::int32_t k = L.pos[b];
    if (k < 0) return i;
    if (k > 0) g *= L.rep_inv[k];
  }
  return levels_.size();
}

void PermGroup::add_strong_generator(const Perm& g, std::size_t lvl) {
  if (lvl == levels_.size()) {
    ChainLevel L;
    for (std::size_t p = 0; p < degree_; ++p)
      if (g[p] != p) {
        L.point = static_cast<point_t>(p);
        break;
      }
    levels_.push_back(std::move(L));
  }
  for (std::size_t j = 1; j <= lvl; ++j) levels_[j].gens.push_back(g);
  if (lvl == 0) levels_[0].gens.push_back(g);
  for (std::size_t j = (lvl == 0 ? 0 : 1); j <= lvl; ++j) recompute_level(j);
}

std::uint64_t PermGroup::chain_order() const {
  std::uint64_t o = 1;
  for (const auto& L : levels_) o *= L.orbit.size();
  return o;
}

void PermGroup::build(std::uint64_t order_hint, const std::vector<point_t>& base_prefix) {
  levels_.clear();
  std::vector<Perm> nontriv;
  for (const auto& g : gens_)
    if (!g.is_identity()) nontriv.push_back(g);
  for (point_t b : base_prefix) {
    ChainLevel L;
    L.point = b;
    levels_.push_back(std::move(L));
  }
  // base must be moved by every nontrivial generator somewhere
  for (const auto& g : nontriv) {
    bool moved = false;
    for (const auto& L : levels_)
      if (g[L.point] != L.point) {
        moved = true;
        break;
      }
    if (!moved) {
      ChainLevel L;
      for (std::size_t p = 0; p < degree_; ++p)
        if (g[p] != p) {
          L.point = static_cast<point_t>(p);
          break;
        }
      levels_.push_back(std::move(L));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : nontriv) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g[levels_[j].point] != levels_[j].point) {
          fixes = false;
          break;
        }
      if (fixes) levels_[i].gens.push_back(g);
    }
    recompute_level(i);
  }
  if (nontriv.empty()) {
    order_ = 1;
    return;
  }

  // random phase
  ProductReplacement pr(nontriv, degree_, 0x5eed5eedULL ^ degree_);
  int quiet = 0;
  while (quiet < 30) {
    if (order_hint && chain_order() >= order_hint) break;
    Perm g = pr.next();
    std::size_t lvl = sift(g, 0);
    if (lvl == levels_.size() && g.is_identity()) {
      ++quiet;
      continue;
    }
    quiet = 0;
    add_strong_generator(g, lvl);
  }
  if (order_hint && chain_order() == order_hint) {
    order_ = order_hint;
    return;
  }

  // deterministic Schreier-Sims completion
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restart = false;
    for (std::size_t k = 0; k < levels_[i].orbit.size() && !restart; ++k) {
      for (std::size_t si = 0; si < levels_[i].gens.size(); ++si) {
        const ChainLevel& L = levels_[i];
        const Perm& s = L.gens[si];
        point_t img = s[L.orbit[k]];
        Perm h = L.rep[k] * s * L.rep_inv[L.pos[img]];
        if (h.is_identity()) continue;
        std::size_t lvl = sift(h, i + 1);
        if (lvl == levels_.size() && h.is_identity()) continue;
        add_strong_generator(h, lvl);
        i = lvl + 1;  // resume at the lowest modified level
        restart = true;
        break;
      }
    }
  }
  order_ = chain_order();
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  Perm h = g;
  std::size_t lvl = sift(h, 0);
  return lvl == levels_.size() && h.is_identity();
}

Perm PermGroup::element_from_base_images(const point_t* imgs) const {
  // g = u_{k-1} ... u_0 with u_i chosen level by level
  std::vector<point_t> target(imgs, imgs + levels_.size());
  Perm acc(degree_);  // acc = u_{i-1} ... u_0 so far, applied on the right
  std::vector<const Perm*> us;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const ChainLevel& L = levels_[i];
    std::int32_t k = L.pos[target[i]];
    if (k < 0) throw Error(Errc::not_a_member, "base image not in basic orbit");
    us.push_back(&L.rep[k]);
    const Perm& inv = L.rep_inv[k];
    for (std::size_t j = i + 1; j < levels_.size(); ++j) target[j] = inv[target[j]];
  }
  Perm g(degree_);
  for (std::size_t i = us.size(); i-- > 0;) g *= *us[i];
  return g;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const ChainLevel& L = levels_[i];
    std::uniform_int_distribution<std::size_t> d(0, L.orbit.size() - 1);
    g *= L.rep[d(rng)];
  }
  return g;
}

std::vector<point_t> PermGroup::orbit(point_t p) const {
  std::vector<char> seen(degree_, 0);
  std::vector<point_t> orb{p};
  seen[p] = 1;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens_) {
      point_t y = g[orb[k]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<Perm> PermGroup::stabilizer_generators(std::size_t k) const {
  if (k >= levels_.size()) return {};
  return levels_[k].gens;
}

bool PermGroup::is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

std::uint64_t group_order(const std::vector<Perm>& gens, std::size_t degree,
                          std::uint64_t target) {
  return PermGroup(gens, degree, target).order();
}

}  // namespace ncov
