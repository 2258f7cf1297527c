#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncov/elements.hpp"

namespace ncov {

struct ConjClassTable {
  std::vector<Perm> reps;
  std::vector<std::uint32_t> rep_index;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> orders;
  std::vector<std::string> names;       // ATLAS-style 1A, 2A, 3A, 3B, ...
  std::vector<std::uint32_t> class_of;  // element index -> class index

  std::size_t size() const { return reps.size(); }
  std::uint64_t centralizer_order(std::size_t c, std::uint64_t group_order) const {
    return group_order / sizes[c];
  }
};

ConjClassTable conjugacy_classes(const ElementTable& T);

// Witness g with g^-1 x g = y, if one exists.
std::optional<Perm> are_conjugate(const ElementTable& T, const ConjClassTable& C, const Perm& x,
                                  const Perm& y);

// Conjugacy test without an element table: walks the conjugacy class of x
// (at most `limit` elements). Throws GroupTooLarge past the limit.
std::optional<Perm> are_conjugate_by_orbit(const PermGroup& G, const Perm& x, const Perm& y,
                                           std::uint64_t limit = default_element_bound);

std::uint64_t centralizer_order(const ElementTable& T, const ConjClassTable& C, const Perm& x);

}  // namespace ncov
