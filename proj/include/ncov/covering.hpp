#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncov/classes.hpp"
#include "ncov/lattice.hpp"

namespace ncov {

// Fixed-width-free bit set over class indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const;
  bool any() const;
  bool covers(const Bits& o) const;  // o is a subset of *this
  bool intersects(const Bits& o) const;
  Bits& operator|=(const Bits& o);
  Bits& operator&=(const Bits& o);
  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct CoverInstance {
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> class_orders;
  std::vector<SubgroupRecord> subgroups;
  // meets[i][j]: class i has an element in subgroup j
  std::vector<std::vector<char>> meets;
  // below[a][b]: a conjugate of subgroup a lies in subgroup b (optional)
  std::vector<std::vector<char>> below;

  std::size_t nclasses() const { return class_sizes.size(); }
  Bits column(std::size_t j) const;
  bool is_cyclic() const;
};

CoverInstance incidence_matrix(const ElementTable& T, const ConjClassTable& C,
                               const std::vector<SubgroupRecord>& subgroups);
// From a lattice, keeping the containment data.
CoverInstance incidence_matrix(const ElementTable& T, const ConjClassTable& C,
                               const SubgroupLattice& L, bool proper_only = true);
// Same meets matrix through permutation-character supports.
std::vector<std::vector<char>> incidence_by_characters(const ElementTable& T,
                                                       const ConjClassTable& C,
                                                       const std::vector<SubgroupRecord>& subgroups);

bool is_normal_covering(const CoverInstance& inst, const std::vector<std::size_t>& selected);

// Exact minimum set cover: columns cover the bits of `universe`.
std::optional<std::vector<std::size_t>> min_set_cover(const std::vector<Bits>& columns,
                                                      const Bits& universe);

// gamma(G) over the maximal columns.
std::size_t covering_number(const CoverInstance& inst);
std::vector<std::size_t> minimum_covering(const CoverInstance& inst);

struct CoveringPair {
  std::size_t h, k;  // subgroup column indices, h < k
  bool minimal = true;
};
std::vector<CoveringPair> enumerate_2coverings(const CoverInstance& inst, bool restrict_maximal);

struct Graph {
  std::vector<std::size_t> vertices;  // class indices
  std::vector<Bits> adj;              // over positions in `vertices`
};

// Lambda(G): non-identity classes, adjacent when no maximal column meets both.
Graph invariable_graph(const CoverInstance& inst);
Graph graph_from_rows(const std::vector<std::vector<char>>& meets_rows,
                      const std::vector<std::size_t>& vertices);
std::size_t clique_number(const Graph& g);
std::vector<std::size_t> max_clique(const Graph& g);

}  // namespace ncov
