#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "skewbrace/error.hpp"

namespace skewbrace {

// Index of an element inside an ambient structure of order n (0..n-1).
using Elem = int;

// Permutation of {0..n-1} stored as its image list.
//
// Composition follows the right-action convention used everywhere in this
// library: compose(f, g) applies f FIRST and g second, matching the
// exponent notation x^{fg} = (x^f)^g.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<Elem> images) : img_(std::move(images)) {
    if (!is_bijection(img_)) fail(Errc::parse_error, "image list is not a bijection");
  }

  static Perm identity(int n) {
    std::vector<Elem> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
  }

  int degree() const { return static_cast<int>(img_.size()); }

  Elem operator()(Elem x) const { return img_[static_cast<size_t>(x)]; }

  const std::vector<Elem>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<Elem> v(img_.size());
    for (int i = 0; i < degree(); ++i) v[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    Perm p;
    p.img_ = std::move(v);
    return p;
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < img_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(img_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;
  // Lexicographic order on image lists; this is the canonical enumeration
  // order for search results (the identity sorts first).
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

  static bool is_bijection(const std::vector<Elem>& images) {
    std::vector<char> seen(images.size(), 0);
    for (Elem v : images) {
      if (v < 0 || static_cast<size_t>(v) >= images.size() || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
    }
    return true;
  }

 private:
  std::vector<Elem> img_;
};

// Apply `first`, then `second`.
inline Perm compose(const Perm& first, const Perm& second) {
  std::vector<Elem> v(static_cast<size_t>(first.degree()));
  for (int i = 0; i < first.degree(); ++i) v[static_cast<size_t>(i)] = second(first(i));
  return Perm(std::move(v));
}

}  // namespace skewbrace
