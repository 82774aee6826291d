#pragma once

#include <map>
#include <utility>
#include <vector>

#include "skewbrace/automorphism.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

// Hol(B, .) = Aut(B, .) |x (B, .), elements (f, c) acting on the right by
// b -> f(b) . c.  Built as an implicit group: products and inverses are
// computed, never tabulated as a full Cayley table.  Elements are packed
// as f * n + c with the identity automorphism at index 0.
class Holomorph {
 public:
  Holomorph(FiniteGroup group, std::vector<Perm> automorphisms)
      : g_(std::move(group)), auts_(std::move(automorphisms)) {
    const int n = g_.order();
    std::map<std::vector<Elem>, int> index;
    for (int i = 0; i < static_cast<int>(auts_.size()); ++i) index[auts_[static_cast<size_t>(i)].images()] = i;
    if (index.find(Perm::identity(n).images()) == index.end() ||
        index[Perm::identity(n).images()] != 0)
      fail(Errc::not_automorphism, "automorphism list must be sorted with the identity first");
    comp_.assign(auts_.size() * auts_.size(), -1);
    aut_inv_.assign(auts_.size(), -1);
    for (size_t i = 0; i < auts_.size(); ++i) {
      for (size_t j = 0; j < auts_.size(); ++j) {
        auto it = index.find(compose(auts_[i], auts_[j]).images());
        if (it == index.end()) fail(Errc::not_automorphism, "automorphism list not closed under composition");
        comp_[i * auts_.size() + j] = it->second;
      }
      aut_inv_[i] = index.at(auts_[i].inverse().images());
    }
  }

  const FiniteGroup& group() const { return g_; }
  int degree() const { return g_.order(); }
  int num_automorphisms() const { return static_cast<int>(auts_.size()); }
  int size() const { return num_automorphisms() * degree(); }
  int identity() const { return 0; }

  int pack(int aut, Elem c) const { return aut * degree() + c; }
  int aut_part(int h) const { return h / degree(); }
  Elem elt_part(int h) const { return h % degree(); }
  const Perm& aut(int i) const { return auts_[static_cast<size_t>(i)]; }

  // b^{(f, c)} = f(b) . c
  Elem act(Elem b, int h) const { return g_.mul(auts_[static_cast<size_t>(aut_part(h))](b), elt_part(h)); }

  int mul(int h1, int h2) const {
    int f1 = aut_part(h1), f2 = aut_part(h2);
    Elem c1 = elt_part(h1), c2 = elt_part(h2);
    int f = comp_[static_cast<size_t>(f1) * auts_.size() + static_cast<size_t>(f2)];
    return pack(f, g_.mul(auts_[static_cast<size_t>(f2)](c1), c2));
  }

  int inv(int h) const {
    int f = aut_part(h);
    int fi = aut_inv_[static_cast<size_t>(f)];
    return pack(fi, g_.inv(auts_[static_cast<size_t>(fi)](elt_part(h))));
  }

  bool fixed_point_free(int h) const {
    for (Elem b = 0; b < degree(); ++b)
      if (act(b, h) == b) return false;
    return true;
  }

 private:
  FiniteGroup g_;
  std::vector<Perm> auts_;
  std::vector<int> comp_;
  std::vector<int> aut_inv_;
};

inline Holomorph holomorph(const FiniteGroup& g, int cap = kDefaultOrderCap) {
  AutomorphismGroup a = automorphism_group(g, cap);
  return Holomorph(g, std::move(a.elements));
}

}  // namespace skewbrace
