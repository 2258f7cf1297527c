#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncov/subgroup.hpp"

namespace ncov {

struct SubgroupRecord {
  std::string label;
  std::vector<Perm> gens;
  std::uint64_t order = 0;
  bool is_maximal = false;
  std::string aschbacher;  // C1..C8, S, or empty
};

struct SubgroupClass {
  TableSubgroup rep;
  std::uint64_t length = 1;  // number of conjugates
  std::string label;
  bool is_maximal = false;
};

struct SubgroupLattice {
  std::vector<SubgroupClass> classes;  // sorted by order; trivial first, G last
  // below[i][j]: a conjugate of class i lies in class j
  std::vector<std::vector<char>> below;

  std::vector<SubgroupRecord> records() const;
};

struct LatticeOptions {
  std::uint64_t class_limit = 20000;
};

SubgroupLattice all_subgroups(const ElementTable& T, const ConjClassTable& C,
                              const LatticeOptions& opt = {});

std::vector<SubgroupRecord> maximal_subgroups(const SubgroupLattice& L);

// Cosets of a subgroup with explicit representatives, for "does <x,y> lie in a
// conjugate of M" questions.
class CosetView {
 public:
  CosetView(const ElementTable& T, TableSubgroup M);
  const TableSubgroup& subgroup() const { return M_; }
  std::size_t index() const { return reps_.size(); }
  bool contains(std::uint32_t e) const { return part_.coset_of[e] == home_; }
  // cosets zM with z^-1 x z in M
  std::vector<std::uint32_t> fixed_cosets(const Perm& x) const;
  bool fixes(std::uint32_t coset, const Perm& x) const;
  // true when every element of `gens` lies in one common conjugate of M
  bool common_conjugate(const std::vector<Perm>& gens) const;

 private:
  const ElementTable* T_;
  TableSubgroup M_;
  CosetPartition part_;
  std::uint32_t home_ = 0;
  std::vector<Perm> reps_, reps_inv_;
};

// If <H, g> = G for every g outside H, returns nullopt; otherwise a strictly
// larger proper subgroup. Uses one g per double coset HgH.
std::optional<TableSubgroup> proper_overgroup(const ElementTable& T, const TableSubgroup& H);
TableSubgroup extend_to_maximal(const ElementTable& T, TableSubgroup H, std::uint64_t seed);
bool is_maximal_subgroup(const ElementTable& T, const TableSubgroup& H);

struct MaximalSearchOptions {
  std::uint64_t seed = 1;
  std::size_t pairs_per_class = 400;
  std::function<void(const std::string&)> log;
};

// Conjugacy classes of maximal subgroups met by 2-generated subgroups <x, y>,
// x running over class representatives and y over random elements.
std::vector<TableSubgroup> search_maximal_subgroups(const ElementTable& T, const ConjClassTable& C,
                                                   const MaximalSearchOptions& opt);

// Small structural name: C6, D10, E8, A4, S4 ... or the order with a suffix.
std::string guess_label(const ElementTable& T, const ConjClassTable& C, const TableSubgroup& H);

}  // namespace ncov
