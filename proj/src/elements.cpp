#include "ncov/elements.hpp"

#include <algorithm>

#include "ncov/error.hpp"

namespace ncov {

ElementTable::ElementTable(const PermGroup& G, std::uint64_t bound) : group_(&G) {
  if (G.order() > bound)
    throw Error(Errc::group_too_large, "order " + std::to_string(G.order()) + " exceeds bound " +
                                           std::to_string(bound));
  const auto base = G.base();
  const auto& gens = G.generators();
  nb_ = base.size();
  std::vector<std::int32_t> where(G.degree(), -1);
  auto add_point = [&](point_t p) {
    if (where[p] < 0) {
      where[p] = static_cast<std::int32_t>(pts_.size());
      pts_.push_back(p);
    }
    return static_cast<std::uint32_t>(where[p]);
  };
  for (point_t b : base) add_point(b);
  fwd_.resize(gens.size());
  bwd_.resize(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Perm inv = gens[k].inverse();
    for (point_t b : base) {
      fwd_[k].push_back(add_point(gens[k][b]));
      bwd_[k].push_back(add_point(inv[b]));
    }
  }
  np_ = pts_.size();
  n_ = static_cast<std::size_t>(G.order());
  data_.resize(n_ * np_);
  std::uint64_t cap = 16;
  while (cap < 2 * n_ + 2) cap <<= 1;
  slots_.assign(cap, 0xffffffffu);
  mask_ = cap - 1;
  rmul_.assign(gens.size(), std::vector<std::uint32_t>(n_));

  std::copy(pts_.begin(), pts_.end(), data_.begin());
  insert_slot(0);
  std::size_t count = 1;
  std::vector<point_t> tmp(np_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const point_t* x = imgs(i);
      for (std::size_t j = 0; j < np_; ++j) tmp[j] = gens[k][x[j]];
      std::int64_t f = find_key(tmp.data());
      if (f < 0) {
        if (count >= n_) throw Error(Errc::group_too_large, "closure exceeded chain order");
        std::copy(tmp.begin(), tmp.end(), data_.begin() + count * np_);
        insert_slot(static_cast<std::uint32_t>(count));
        f = static_cast<std::int64_t>(count++);
      }
      rmul_[k][i] = static_cast<std::uint32_t>(f);
    }
  }
  if (count != n_) throw Error(Errc::group_too_large, "closure smaller than chain order");
}

void ElementTable::insert_slot(std::uint32_t idx) {
  std::uint64_t h = hash_points(imgs(idx), nb_) & mask_;
  while (slots_[h] != 0xffffffffu) h = (h + 1) & mask_;
  slots_[h] = idx;
}

std::int64_t ElementTable::find_key(const point_t* key) const {
  std::uint64_t h = hash_points(key, nb_) & mask_;
  while (true) {
    std::uint32_t s = slots_[h];
    if (s == 0xffffffffu) return -1;
    if (std::equal(key, key + nb_, imgs(s))) return s;
    h = (h + 1) & mask_;
  }
}

std::int64_t ElementTable::index_of(const Perm& g) const {
  if (g.degree() != group_->degree()) return -1;
  std::vector<point_t> key(nb_);
  for (std::size_t j = 0; j < nb_; ++j) key[j] = g[pts_[j]];
  std::int64_t f = find_key(key.data());
  if (f < 0) return -1;
  // the key determines a group element; confirm g is that element
  if (!group_->contains(g)) return -1;
  return f;
}

Perm ElementTable::element(std::size_t i) const { return group_->element_from_base_images(imgs(i)); }

std::uint64_t ElementTable::element_order(std::size_t i) const { return element(i).order(); }

std::uint32_t ElementTable::right_mul(std::size_t i, const Perm& h) const {
  std::vector<point_t> key(nb_);
  const point_t* x = imgs(i);
  for (std::size_t j = 0; j < nb_; ++j) key[j] = h[x[j]];
  std::int64_t f = find_key(key.data());
  if (f < 0) throw Error(Errc::not_a_member, "right multiplier not in group");
  return static_cast<std::uint32_t>(f);
}

std::uint32_t ElementTable::left_mul_gen(std::size_t k, std::size_t i) const {
  // b^{g x} = (b^g)^x
  std::vector<point_t> key(nb_);
  const point_t* x = imgs(i);
  for (std::size_t j = 0; j < nb_; ++j) key[j] = x[fwd_[k][j]];
  return static_cast<std::uint32_t>(find_key(key.data()));
}

std::uint32_t ElementTable::left_mul_gen_inv(std::size_t k, std::size_t i) const {
  std::vector<point_t> key(nb_);
  const point_t* x = imgs(i);
  for (std::size_t j = 0; j < nb_; ++j) key[j] = x[bwd_[k][j]];
  return static_cast<std::uint32_t>(find_key(key.data()));
}

std::uint32_t ElementTable::left_mul(const Perm& h, std::size_t i) const {
  Perm x = element(i);
  std::vector<point_t> key(nb_);
  for (std::size_t j = 0; j < nb_; ++j) key[j] = x[h[pts_[j]]];
  std::int64_t f = find_key(key.data());
  if (f < 0) throw Error(Errc::not_a_member, "left multiplier not in group");
  return static_cast<std::uint32_t>(f);
}

std::uint32_t ElementTable::mul(std::size_t i, std::size_t j) const {
  return right_mul(i, element(j));
}

std::uint32_t ElementTable::inverse(std::size_t i) const {
  Perm x = element(i).inverse();
  std::vector<point_t> key(nb_);
  for (std::size_t j = 0; j < nb_; ++j) key[j] = x[pts_[j]];
  return static_cast<std::uint32_t>(find_key(key.data()));
}

std::uint32_t ElementTable::conj_gen(std::size_t i, std::size_t k) const {
  if (!conj_.empty()) return conj_[k][i];
  // b^{g^-1 x g} = ((b^{g^-1})^x)^g
  const Perm& g = group_->generators()[k];
  std::vector<point_t> key(nb_);
  const point_t* x = imgs(i);
  for (std::size_t j = 0; j < nb_; ++j) key[j] = g[x[bwd_[k][j]]];
  return static_cast<std::uint32_t>(find_key(key.data()));
}

const std::vector<std::vector<std::uint32_t>>& ElementTable::conj_tables() const {
  if (conj_.empty()) {
    std::vector<std::vector<std::uint32_t>> t(ngens(), std::vector<std::uint32_t>(n_));
    for (std::size_t k = 0; k < ngens(); ++k)
      for (std::size_t i = 0; i < n_; ++i) t[k][i] = conj_gen(i, k);
    conj_ = std::move(t);
  }
  return conj_;
}

std::uint32_t ElementTable::conj(std::size_t i, const Perm& h) const {
  Perm hinv = h.inverse();
  Perm x = element(i);
  std::vector<point_t> key(nb_);
  for (std::size_t j = 0; j < nb_; ++j) key[j] = h[x[hinv[pts_[j]]]];
  std::int64_t f = find_key(key.data());
  if (f < 0) throw Error(Errc::not_a_member, "conjugator not in group");
  return static_cast<std::uint32_t>(f);
}

std::int64_t ElementTable::conj_index(const Perm& x, const Perm& h, const Perm& h_inv) const {
  point_t key[64];
  std::vector<point_t> big;
  point_t* k = key;
  if (nb_ > 64) {
    big.resize(nb_);
    k = big.data();
  }
  for (std::size_t j = 0; j < nb_; ++j) k[j] = h[x[h_inv[pts_[j]]]];
  return find_key(k);
}

}  // namespace ncov
