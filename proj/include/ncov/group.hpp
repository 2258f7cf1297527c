#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ncov/perm.hpp"

namespace ncov {

// One level of a stabilizer chain: the basic orbit of base point `point`
// under the strong generators fixing all earlier base points.
struct ChainLevel {
  point_t point = 0;
  std::vector<Perm> gens;
  std::vector<point_t> orbit;
  std::vector<std::int32_t> pos;  // point -> index in orbit, -1 if absent
  std::vector<Perm> rep;          // rep[k] maps `point` to orbit[k]
  std::vector<Perm> rep_inv;
};

class PermGroup {
 public:
  PermGroup() = default;
  // Builds an exact stabilizer chain. `order_hint`, when nonzero, must be the
  // order of an overgroup; reaching it ends the construction early.
  PermGroup(std::vector<Perm> gens, std::size_t degree, std::uint64_t order_hint = 0,
            const std::vector<point_t>& base_prefix = {});
  explicit PermGroup(std::vector<Perm> gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  bool contains(const Perm& g) const;

  const std::vector<ChainLevel>& chain() const { return levels_; }
  std::vector<point_t> base() const;

  // The unique element sending base()[i] to imgs[i] for every i.
  Perm element_from_base_images(const point_t* imgs) const;
  Perm random_element(std::mt19937_64& rng) const;
  std::vector<point_t> orbit(point_t p) const;
  // Generators of the stabilizer of the first `k` base points.
  std::vector<Perm> stabilizer_generators(std::size_t k) const;
  bool is_transitive() const;

  Perm identity() const { return Perm(degree_); }

 private:
  void build(std::uint64_t order_hint, const std::vector<point_t>& base_prefix);
  // Sifts g starting at `from`; returns level where it stopped (levels_.size() if through).
  std::size_t sift(Perm& g, std::size_t from) const;
  void recompute_level(std::size_t i);
  void add_strong_generator(const Perm& g, std::size_t lvl);
  std::uint64_t chain_order() const;

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<ChainLevel> levels_;
  std::uint64_t order_ = 1;
};

// Order of <gens>, stopping early once `target` (an overgroup order) is reached.
std::uint64_t group_order(const std::vector<Perm>& gens, std::size_t degree,
                          std::uint64_t target = 0);

}  // namespace ncov
