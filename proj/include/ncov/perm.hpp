#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ncov {

using point_t = std::uint16_t;

// Permutations act on the right: (x)(p*q) = ((x)p)q. Points are 0-based
// internally and 1-based in text.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<point_t> images);

  std::size_t degree() const { return img_.size(); }
  point_t operator[](std::size_t i) const { return img_[i]; }
  const std::vector<point_t>& images() const { return img_; }
  const point_t* data() const { return img_.data(); }

  Perm operator*(const Perm& rhs) const;
  Perm& operator*=(const Perm& rhs);
  Perm inverse() const;
  Perm pow(std::int64_t e) const;

  bool is_identity() const;
  std::uint64_t order() const;
  // Sorted cycle lengths, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  std::string to_string() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<point_t> img_;
};

// x^g = g^-1 x g
Perm conjugate(const Perm& x, const Perm& g);

Perm parse_permutation(std::string_view text, std::size_t degree);

std::uint64_t hash_points(const point_t* p, std::size_t n);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return hash_points(p.data(), p.degree()); }
};

}  // namespace ncov
