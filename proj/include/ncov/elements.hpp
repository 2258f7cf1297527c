#pragma once

#include <cstdint>
#include <vector>

#include "ncov/group.hpp"

namespace ncov {

inline constexpr std::uint64_t default_element_bound = 2000000;
inline constexpr std::size_t default_degree_bound = 2048;

// All elements of a group, each stored by its images of a small point set P
// (the base plus the base moved by each generator and its inverse). That is
// enough to multiply on the right by anything and to conjugate or multiply on
// the left by generators; full permutations are rebuilt from the chain.
class ElementTable {
 public:
  ElementTable(const PermGroup& G, std::uint64_t bound = default_element_bound);

  const PermGroup& group() const { return *group_; }
  std::size_t size() const { return n_; }
  std::size_t ngens() const { return group_->generators().size(); }

  std::int64_t index_of(const Perm& g) const;
  Perm element(std::size_t i) const;
  std::uint64_t element_order(std::size_t i) const;

  std::uint32_t mul_gen(std::size_t i, std::size_t k) const { return rmul_[k][i]; }
  std::uint32_t right_mul(std::size_t i, const Perm& h) const;
  std::uint32_t left_mul_gen(std::size_t k, std::size_t i) const;
  std::uint32_t left_mul_gen_inv(std::size_t k, std::size_t i) const;
  std::uint32_t left_mul(const Perm& h, std::size_t i) const;
  std::uint32_t mul(std::size_t i, std::size_t j) const;
  std::uint32_t inverse(std::size_t i) const;
  // g_k^-1 e_i g_k
  std::uint32_t conj_gen(std::size_t i, std::size_t k) const;
  // Conjugation tables for every generator, built on first use.
  const std::vector<std::vector<std::uint32_t>>& conj_tables() const;
  // h^-1 e_i h for an arbitrary h in G
  std::uint32_t conj(std::size_t i, const Perm& h) const;
  // index of h^-1 x h, or -1 when it is not in the group
  std::int64_t conj_index(const Perm& x, const Perm& h, const Perm& h_inv) const;

  std::uint32_t identity_index() const { return 0; }

 private:
  std::int64_t find_key(const point_t* key) const;
  const point_t* imgs(std::size_t i) const { return data_.data() + i * np_; }
  void insert_slot(std::uint32_t idx);

  const PermGroup* group_;
  std::size_t nb_ = 0;          // base length
  std::size_t np_ = 0;          // |P|
  std::vector<point_t> pts_;    // P, base first
  std::vector<std::vector<std::uint32_t>> fwd_;  // position of p^{g_k} in P for base p
  std::vector<std::vector<std::uint32_t>> bwd_;  // position of p^{g_k^-1} in P
  std::vector<point_t> data_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> slots_;
  std::uint64_t mask_ = 0;
  std::vector<std::vector<std::uint32_t>> rmul_;
  mutable std::vector<std::vector<std::uint32_t>> conj_;
};

}  // namespace ncov
