#pragma once

#include <algorithm>
#include <vector>

#include "skewbrace/group.hpp"
#include "skewbrace/perm.hpp"

namespace skewbrace {

inline constexpr int kDefaultOrderCap = 64;

struct AutomorphismGroup {
  std::vector<Perm> elements;    // sorted by image tuple; identity first
  std::vector<Perm> generators;  // greedy generating subset of `elements`
};

// Greedy generating set: repeatedly add the element whose inclusion grows
// the generated subgroup the most (smallest index on ties).
inline std::vector<Elem> greedy_generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<Elem> current = subgroup_closure(g, {});
  while (static_cast<int>(current.size()) < g.order()) {
    Elem best = -1;
    size_t best_size = current.size();
    std::vector<Elem> trial = gens;
    for (Elem x = 0; x < g.order(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      trial.push_back(x);
      size_t s = subgroup_closure(g, trial).size();
      trial.pop_back();
      if (s > best_size) {
        best_size = s;
        best = x;
      }
    }
    gens.push_back(best);
    current = subgroup_closure(g, gens);
  }
  return gens;
}

namespace detail {

// Definition chain for the subgroup generated by a prefix of `gens`:
// every member is either the identity or chain_parent * gens[chain_gen],
// with the parent appearing earlier in bfs order.
struct DefinitionChain {
  std::vector<Elem> bfs;      // members in discovery order, identity first
  std::vector<Elem> parent;   // indexed like bfs; -1 for the identity
  std::vector<int> gen;       // generator index used in the definition
};

inline DefinitionChain definition_chain(const FiniteGroup& g, const std::vector<Elem>& gens, int prefix) {
  DefinitionChain c;
  std::vector<char> in(static_cast<size_t>(g.order()), 0);
  c.bfs.push_back(g.identity());
  c.parent.push_back(-1);
  c.gen.push_back(-1);
  in[static_cast<size_t>(g.identity())] = 1;
  for (size_t i = 0; i < c.bfs.size(); ++i) {
    for (int k = 0; k < prefix; ++k) {
      Elem next = g.mul(c.bfs[i], gens[static_cast<size_t>(k)]);
      if (!in[static_cast<size_t>(next)]) {
        in[static_cast<size_t>(next)] = 1;
        c.bfs.push_back(next);
        c.parent.push_back(c.bfs[i]);
        c.gen.push_back(k);
      }
    }
  }
  return c;
}

struct IsoSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<Elem> gens;
  std::vector<DefinitionChain> chains;  // chains[k] = chain of <gens[0..k]>
  std::vector<std::vector<Elem>> candidates;
  std::vector<Elem> g_orders;
  std::vector<Elem> h_orders;
  std::vector<Perm> found;

  IsoSearch(const FiniteGroup& g_, const FiniteGroup& h_) : g(g_), h(h_) {
    gens = greedy_generating_set(g);
    if (gens.empty()) gens.push_back(g.identity());  // trivial group
    chains.reserve(gens.size());
    for (size_t k = 1; k <= gens.size(); ++k)
      chains.push_back(definition_chain(g, gens, static_cast<int>(k)));
    g_orders = g.element_orders();
    h_orders = h.element_orders();
    candidates.resize(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
      Elem want = g_orders[static_cast<size_t>(gens[k])];
      for (Elem y = 0; y < h.order(); ++y)
        if (h_orders[static_cast<size_t>(y)] == want) candidates[k].push_back(y);
    }
  }

  // Rebuild images of <gens[0..depth]> from the generator images; returns
  // false when the partial map fails injectivity or the homomorphism law.
  bool consistent(const std::vector<Elem>& gen_img, int depth, std::vector<Elem>& img) const {
    const DefinitionChain& c = chains[static_cast<size_t>(depth)];
    std::fill(img.begin(), img.end(), -1);
    std::vector<char> used(static_cast<size_t>(h.order()), 0);
    img[static_cast<size_t>(g.identity())] = h.identity();
    used[static_cast<size_t>(h.identity())] = 1;
    for (size_t i = 1; i < c.bfs.size(); ++i) {
      Elem value = h.mul(img[static_cast<size_t>(c.parent[i])], gen_img[static_cast<size_t>(c.gen[i])]);
      if (used[static_cast<size_t>(value)]) return false;
      used[static_cast<size_t>(value)] = 1;
      img[static_cast<size_t>(c.bfs[i])] = value;
    }
    // Homomorphism law on everything defined so far.
    for (Elem a : c.bfs)
      for (Elem b : c.bfs)
        if (img[static_cast<size_t>(g.mul(a, b))] != h.mul(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]))
          return false;
    return true;
  }

  void run(int depth, std::vector<Elem>& gen_img) {
    std::vector<Elem> img(static_cast<size_t>(g.order()), -1);
    for (Elem cand : candidates[static_cast<size_t>(depth)]) {
      gen_img[static_cast<size_t>(depth)] = cand;
      if (!consistent(gen_img, depth, img)) continue;
      if (depth + 1 == static_cast<int>(gens.size())) {
        if (static_cast<int>(chains.back().bfs.size()) == g.order()) found.emplace_back(img);
      } else {
        run(depth + 1, gen_img);
      }
    }
    gen_img[static_cast<size_t>(depth)] = -1;
  }
};

}  // namespace detail

// All bijections f with f(x *_G y) = f(x) *_H f(y), sorted by image tuple.
// Empty when the groups are not isomorphic.
inline std::vector<Perm> isomorphisms(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return {};
  {
    // Cheap obstruction: the multiset of element orders must match.
    std::vector<Elem> a = g.element_orders(), b = h.element_orders();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return {};
  }
  detail::IsoSearch search(g, h);
  std::vector<Elem> gen_img(search.gens.size(), -1);
  search.run(0, gen_img);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

// The full automorphism group, by backtracking on images of a greedy
// generating set.  Closure under composition/inverse is verified.
inline AutomorphismGroup automorphism_group(const FiniteGroup& g, int cap = kDefaultOrderCap) {
  if (g.order() > cap)
    fail(Errc::order_cap_exceeded, "group order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  AutomorphismGroup out;
  out.elements = isomorphisms(g, g);
  auto has = [&](const Perm& p) {
    return std::binary_search(out.elements.begin(), out.elements.end(), p);
  };
  if (!has(Perm::identity(g.order())))
    fail(Errc::not_automorphism, "automorphism search lost the identity map");
  // Generating subset by sifting: scan in canonical order, keep every map
  // outside the closure so far.
  std::vector<Perm> closure{Perm::identity(g.order())};
  auto rebuild_closure = [&]() {
    auto contains = [&](const Perm& p) {
      return std::binary_search(closure.begin(), closure.end(), p);
    };
    std::sort(closure.begin(), closure.end());
    std::vector<Perm> frontier = closure;
    while (!frontier.empty()) {
      std::vector<Perm> fresh;
      for (const Perm& p : frontier)
        for (const Perm& q : out.generators) {
          Perm r = compose(p, q);
          if (!contains(r) && std::find(fresh.begin(), fresh.end(), r) == fresh.end()) fresh.push_back(r);
        }
      for (const Perm& p : fresh) closure.push_back(p);
      std::sort(closure.begin(), closure.end());
      frontier = std::move(fresh);
    }
  };
  for (const Perm& p : out.elements) {
    if (std::binary_search(closure.begin(), closure.end(), p)) continue;
    out.generators.push_back(p);
    rebuild_closure();
    if (closure.size() == out.elements.size()) break;
  }
  if (closure.size() != out.elements.size())
    fail(Errc::not_automorphism, "automorphism generator sift failed to close");
  return out;
}

// Test-grade oracle: filter all n! bijections.  Only sensible for n <= 8.
inline std::vector<Perm> isomorphisms_brute_force(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<Perm> out;
  if (g.order() != h.order()) return out;
  std::vector<Elem> img(static_cast<size_t>(g.order()));
  std::iota(img.begin(), img.end(), 0);
  do {
    bool ok = true;
    for (Elem a = 0; a < g.order() && ok; ++a)
      for (Elem b = 0; b < g.order() && ok; ++b)
        ok = img[static_cast<size_t>(g.mul(a, b))] ==
             h.mul(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]);
    if (ok) out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skewbrace
