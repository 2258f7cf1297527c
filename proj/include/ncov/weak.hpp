#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncov/covering.hpp"
#include "ncov/matrix.hpp"

namespace ncov {

// A = an overgroup acting on G by conjugation, G normal in A.
struct AutContext {
  PermGroup A;
  PermGroup G;
  std::vector<Perm> transversal;  // coset representatives of G in A, identity first

  std::uint64_t index() const { return transversal.size(); }
};

AutContext make_aut_context(PermGroup A, const std::vector<Perm>& socle_gens);

struct FusionMap {
  std::vector<std::uint32_t> aut_class_of;        // G-class -> Aut-class
  std::vector<std::vector<std::uint32_t>> members;  // Aut-class -> G-classes
  std::size_t size() const { return members.size(); }
};

FusionMap fuse_classes(const AutContext& ctx, const ElementTable& T, const ConjClassTable& C);

// For each subgroup column, the index of its A-orbit (orbits numbered by first column).
std::vector<std::uint32_t> subgroup_orbits(const AutContext& ctx, const ElementTable& T,
                                           const ConjClassTable& C,
                                           const std::vector<SubgroupRecord>& subgroups);

struct WeakInstance {
  CoverInstance inst;  // G-level data over the maximal subgroup classes of G
  FusionMap fusion;
  std::vector<std::uint32_t> orbit_of;                // column -> A-orbit
  std::vector<std::vector<std::size_t>> orbits;       // A-orbit -> columns
  std::vector<std::vector<char>> aut_meets;           // Aut-class x A-orbit

  bool orbit_pair_covers(std::size_t a, std::size_t b) const;
};

// With `all_maximal` every record is flagged maximal; otherwise the flags
// are kept (drop-maximality counts over a whole lattice).
WeakInstance build_weak(const AutContext& ctx, const ElementTable& T, const ConjClassTable& C,
                        const std::vector<SubgroupRecord>& subgroups, bool all_maximal = true);

std::size_t weak_covering_number(const WeakInstance& W);
Graph aut_invariable_graph(const WeakInstance& W);

struct PairCount {
  std::size_t C = 0, h = 0, k = 0;
  bool invariants_hold = true;  // max{h,k} | C and C <= hk
};

// Number of G-classes of normal coverings inside the Aut-class of {H, K}.
PairCount count_normal_in_aut_class(const WeakInstance& W, std::size_t colH, std::size_t colK);

struct WeakPair {
  std::size_t orbit_h, orbit_k;
  PairCount count;
};

// Aut-classes of weak normal 2-coverings; with `restrict_maximal` only
// maximal columns are used.
std::vector<WeakPair> weak_2coverings(const WeakInstance& W, bool restrict_maximal = true);

// Adds the A-images of the listed subgroups that are not G-conjugate to one
// already present (a random search may miss classes fused by A).
std::vector<TableSubgroup> close_under_aut(const AutContext& ctx, const ElementTable& T,
                                           const ConjClassTable& C,
                                           std::vector<TableSubgroup> subs);

// Shintani descent for G = SL2(q0^e) and sigma the q0-power map.
struct ShintaniRow {
  Matrix s;                    // sigma s represents the class
  std::uint64_t class_size = 0;
  std::uint64_t norm_order = 0;  // order of (sigma s)^e
  std::size_t h_class = 0;     // index of the image class in H = SL2(q0)
  std::uint64_t centralizer_g = 0, centralizer_h = 0;
  bool centralizer_conjugate = false;  // C_G(sigma s) = a^-1 C_H(f) a as sets
  bool well_defined = false;           // other class members give the same image
};
struct ShintaniReport {
  std::uint64_t q0 = 0;
  std::uint32_t e = 0;
  std::size_t coset_classes = 0;       // from the twisted action on G
  std::size_t perm_coset_classes = 0;  // from the permutation semidirect product
  std::size_t h_classes = 0;
  std::vector<ShintaniRow> rows;
  bool bijective = false;
  bool ok() const;
};
ShintaniReport shintani_check(std::uint64_t q0, std::uint32_t e,
                              std::uint64_t bound = default_element_bound);

}  // namespace ncov
