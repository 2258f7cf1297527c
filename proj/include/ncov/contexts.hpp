#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncov/io.hpp"
#include "ncov/matrix.hpp"

namespace ncov {

// Standard constructions of the dataset groups. Each returns a group file in
// which `gens` generate the overgroup A and `socle_gens` generate G.

GroupFile alternating_context(std::size_t n);  // S_n over A_n
GroupFile mathieu_group(int n);                // M11 or M12, A = G
GroupFile mathieu12_with_outer();              // M12.2 on 24 points over M12

// PSL_n(q) on projective points inside PGammaL_n(q); with `graph` (n >= 3)
// the action is on points and hyperplanes and a polarity is added.
GroupFile linear_context(std::size_t n, std::uint64_t q, bool graph);
// PSU_n(q) on isotropic points inside PGammaU_n(q).
GroupFile unitary_context(std::size_t n, std::uint64_t q);
// PSp_n(q) on projective points with its diagonal and field automorphisms.
// For n = 4 and q even the action is on points and totally isotropic lines
// and the graph automorphism is added.
GroupFile symplectic_context(std::size_t n, std::uint64_t q);

// Sz(q), q = 2^(2m+1) >= 8, on the q^2+1 points of its ovoid with the
// field automorphisms.
GroupFile suzuki_context(std::uint64_t q);
// J2.2 over J2 on the 100 vertices of the Hall-Janko graph.
GroupFile janko2_context();

// Points of PG(n-1, F) with first nonzero coordinate 1.
class ProjectivePoints {
 public:
  ProjectivePoints(FieldPtr F, std::size_t n);
  std::size_t size() const { return pts_.size(); }
  const Vec& point(std::size_t i) const { return pts_[i]; }
  Vec normalize(Vec v) const;
  std::uint32_t find(const Vec& v) const;  // v nonzero, any scaling
  const FieldPtr& field() const { return F_; }

 private:
  std::uint64_t key(const Vec& v) const;
  FieldPtr F_;
  std::size_t n_;
  std::vector<Vec> pts_;
  std::vector<std::int32_t> index_;  // key of a normalized vector -> position
};

}  // namespace ncov
