#include "ncov/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ncov/error.hpp"

namespace ncov {

Perm::Perm(std::size_t degree) : img_(degree) {
  if (degree > 65535)
    throw Error(Errc::degree_too_large, "degree " + std::to_string(degree));
  std::iota(img_.begin(), img_.end(), point_t{0});
}

Perm::Perm(std::vector<point_t> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (point_t x : img_) {
    if (x >= img_.size() || seen[x])
      throw Error(Errc::malformed_permutation, "image array is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::operator*(const Perm& rhs) const {
  if (rhs.degree() != degree())
    throw Error(Errc::degree_mismatch, "product of permutations of different degree");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = rhs.img_[img_[i]];
  return r;
}

Perm& Perm::operator*=(const Perm& rhs) {
  if (rhs.degree() != degree())
    throw Error(Errc::degree_mismatch, "product of permutations of different degree");
  for (auto& x : img_) x = rhs.img_[x];
  return *this;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<point_t>(i);
  return r;
}

Perm Perm::pow(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Perm r(degree());
  while (k) {
    if (k & 1) r *= base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<std::size_t> lens;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (std::size_t len : cycle_type()) o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

std::string Perm::to_string() const {
  std::ostringstream out;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (j != i) out << ',';
      out << j + 1;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Perm conjugate(const Perm& x, const Perm& g) {
  // g^-1 x g maps i^g to (i^x)^g
  std::vector<point_t> img(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) img[g[i]] = g[x[i]];
  return Perm(std::move(img));
}

Perm parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<point_t> img(degree);
  std::iota(img.begin(), img.end(), point_t{0});
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::malformed_permutation, why + " in '" + std::string(text) + "'");
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '[') {
    // image notation [2,3,1,5,4]
    ++i;
    std::size_t k = 0;
    std::vector<char> hit(degree, 0);
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("expected a point");
      unsigned long v = std::stoul(std::string(text.substr(start, i - start)));
      if (v < 1 || v > degree || k >= degree) fail("point out of range");
      if (hit[v - 1]) fail("repeated point");
      hit[v - 1] = 1;
      img[k++] = static_cast<point_t>(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail("expected ',' or ']'");
    }
    if (k != degree) fail("image list has wrong length");
    skip_ws();
    if (i != text.size()) fail("trailing characters");
    return Perm(std::move(img));
  }
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::size_t> cyc;
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    while (true) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("expected a point");
      unsigned long v = std::stoul(std::string(text.substr(start, i - start)));
      if (v < 1 || v > degree) fail("point out of range");
      if (used[v - 1]) fail("repeated point");
      used[v - 1] = 1;
      cyc.push_back(v - 1);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = static_cast<point_t>(cyc[(k + 1) % cyc.size()]);
    skip_ws();
  }
  return Perm(std::move(img));
}

std::uint64_t hash_points(const point_t* p, std::size_t n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 31;
  return h;
}

}  // namespace ncov
