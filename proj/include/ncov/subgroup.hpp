#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncov/classes.hpp"

namespace ncov {

// A subgroup of an enumerated group, as a sorted list of element indices.
struct TableSubgroup {
  std::vector<Perm> gens;
  std::vector<std::uint32_t> elems;

  std::uint64_t order() const { return elems.size(); }
};

std::vector<std::uint32_t> closure_indices(const ElementTable& T, const std::vector<Perm>& gens);
TableSubgroup make_subgroup(const ElementTable& T, std::vector<Perm> gens);

// Order-independent 64-bit fingerprint of an element set.
std::uint64_t zobrist_key(std::uint32_t idx);
std::uint64_t fingerprint(const std::vector<std::uint32_t>& elems);

std::vector<char> classes_met(const ConjClassTable& C, const std::vector<std::uint32_t>& elems);
std::vector<std::uint64_t> class_distribution(const ConjClassTable& C,
                                              const std::vector<std::uint32_t>& elems);

// Image of an element set under conjugation by generator k (sorted).
std::vector<std::uint32_t> conjugate_elements(const ElementTable& T,
                                              const std::vector<std::uint32_t>& elems,
                                              std::size_t k);

// Witness g with H^g = K.
std::optional<Perm> is_subgroup_conjugate(const ElementTable& T, const ConjClassTable& C,
                                          const TableSubgroup& H, const TableSubgroup& K);

// Left cosets xH; returns coset id per element and one representative per coset.
struct CosetPartition {
  std::vector<std::uint32_t> coset_of;
  std::vector<std::uint32_t> reps;
};
CosetPartition left_cosets(const ElementTable& T, const TableSubgroup& H);

// Action of G's generators on the left cosets xH, (xH)^g = g^-1 x H.
std::vector<Perm> coset_action(const ElementTable& T, const CosetPartition& P);

// Fixed cosets of each class representative on G/H.
std::vector<std::uint64_t> permutation_character(const ElementTable& T, const ConjClassTable& C,
                                                 const TableSubgroup& H,
                                                 std::uint64_t index_bound = 200000);
// Same values from |C_G(c)| |c^G ∩ H| / |H|.
std::vector<std::uint64_t> permutation_character_by_count(const ElementTable& T,
                                                          const ConjClassTable& C,
                                                          const TableSubgroup& H);

// Reusable membership marks over element indices.
class Marks {
 public:
  explicit Marks(std::size_t n) : stamp_(n, 0) {}
  void clear() {
    if (++gen_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      gen_ = 1;
    }
  }
  bool test(std::size_t i) const { return stamp_[i] == gen_; }
  void set(std::size_t i) { stamp_[i] = gen_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t gen_ = 1;
};

}  // namespace ncov
