#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/error.hpp"
#include "skewbrace/perm.hpp"

namespace skewbrace {

// Raw n x n multiplication table, row-major: at(i, j) = i * j.
// Carries no validity guarantee until it passes validate_group().
struct CayleyTable {
  int n = 0;
  std::vector<Elem> cells;

  CayleyTable() = default;
  CayleyTable(int order, std::vector<Elem> c) : n(order), cells(std::move(c)) {
    if (n <= 0 || cells.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
      fail(Errc::parse_error, "table size does not match order " + std::to_string(n));
  }

  static CayleyTable from_rows(const std::vector<std::vector<Elem>>& rows) {
    std::vector<Elem> c;
    c.reserve(rows.size() * rows.size());
    for (const auto& r : rows) {
      if (r.size() != rows.size()) fail(Errc::parse_error, "table is not square");
      c.insert(c.end(), r.begin(), r.end());
    }
    return CayleyTable(static_cast<int>(rows.size()), std::move(c));
  }

  Elem at(Elem i, Elem j) const { return cells[static_cast<size_t>(i) * n + j]; }
  Elem& at(Elem i, Elem j) { return cells[static_cast<size_t>(i) * n + j]; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
};

// A validated finite group on indices 0..n-1.  Immutable after
// construction; all operations are table lookups.
class FiniteGroup {
 public:
  explicit FiniteGroup(CayleyTable table) : t_(std::move(table)) { validate(); }

  int order() const { return t_.n; }
  const CayleyTable& table() const { return t_; }

  Elem identity() const { return id_; }
  Elem mul(Elem a, Elem b) const { return t_.at(a, b); }
  Elem inv(Elem a) const { return inv_[static_cast<size_t>(a)]; }
  const std::vector<Elem>& inverses() const { return inv_; }

  // x^y = y^{-1} x y
  Elem conj(Elem x, Elem y) const { return mul(mul(inv(y), x), y); }
  // [x, y] = x^{-1} y^{-1} x y
  Elem commutator(Elem x, Elem y) const { return mul(inv(x), conj(x, y)); }

  Elem element_order(Elem x) const {
    Elem p = x;
    Elem k = 1;
    while (p != id_) {
      p = mul(p, x);
      ++k;
    }
    return k;
  }

  std::vector<Elem> element_orders() const {
    std::vector<Elem> out(static_cast<size_t>(order()));
    for (Elem x = 0; x < order(); ++x) out[static_cast<size_t>(x)] = element_order(x);
    return out;
  }

  bool is_abelian() const {
    for (Elem a = 0; a < order(); ++a)
      for (Elem b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.t_ == b.t_; }

 private:
  void validate() {
    const int n = t_.n;
    // Latin square: each row and column is a permutation of 0..n-1.
    std::vector<Elem> seen(static_cast<size_t>(n), -1);
    for (Elem i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), -1);
      for (Elem j = 0; j < n; ++j) {
        Elem v = t_.at(i, j);
        if (v < 0 || v >= n)
          fail(Errc::not_latin_square, "entry out of range at cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (seen[static_cast<size_t>(v)] >= 0)
          fail(Errc::not_latin_square, "row " + std::to_string(i) + " repeats value " + std::to_string(v) +
                                           " at columns " + std::to_string(seen[static_cast<size_t>(v)]) + " and " + std::to_string(j));
        seen[static_cast<size_t>(v)] = j;
      }
    }
    for (Elem j = 0; j < n; ++j) {
      std::fill(seen.begin(), seen.end(), -1);
      for (Elem i = 0; i < n; ++i) {
        Elem v = t_.at(i, j);
        if (seen[static_cast<size_t>(v)] >= 0)
          fail(Errc::not_latin_square, "column " + std::to_string(j) + " repeats value " + std::to_string(v) +
                                           " at rows " + std::to_string(seen[static_cast<size_t>(v)]) + " and " + std::to_string(i));
        seen[static_cast<size_t>(v)] = i;
      }
    }
    // Two-sided identity.
    id_ = -1;
    for (Elem e = 0; e < n; ++e) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) ok = t_.at(e, x) == x && t_.at(x, e) == x;
      if (ok) {
        id_ = e;
        break;
      }
    }
    if (id_ < 0) fail(Errc::no_identity, "no two-sided identity element");
    // Two-sided inverses.
    inv_.assign(static_cast<size_t>(n), -1);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (t_.at(x, y) == id_ && t_.at(y, x) == id_) {
          inv_[static_cast<size_t>(x)] = y;
          break;
        }
      }
      if (inv_[static_cast<size_t>(x)] < 0)
        fail(Errc::no_inverse, "element " + std::to_string(x) + " has no two-sided inverse");
    }
    // Associativity, full triple scan.
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (t_.at(t_.at(a, b), c) != t_.at(a, t_.at(b, c)))
            fail(Errc::not_associative, "(a*b)*c != a*(b*c) at (a,b,c) = (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
  }

  CayleyTable t_;
  Elem id_ = 0;
  std::vector<Elem> inv_;
};

inline FiniteGroup validate_group(CayleyTable table) { return FiniteGroup(std::move(table)); }

// Z(G) = { z : xz = zx for all x }, returned sorted.
inline std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x) central = g.mul(x, z) == g.mul(z, x);
    if (central) out.push_back(z);
  }
  return out;
}

// Smallest subset containing gens and the identity, closed under product
// and inverse.  Returned sorted.
inline std::vector<Elem> subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<char> in(static_cast<size_t>(g.order()), 0);
  std::vector<Elem> members;
  auto add = [&](Elem x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      members.push_back(x);
    }
  };
  add(g.identity());
  for (Elem x : gens) add(x);
  for (size_t i = 0; i < members.size(); ++i) {
    add(g.inv(members[i]));
    for (size_t j = 0; j <= i; ++j) {
      add(g.mul(members[i], members[j]));
      add(g.mul(members[j], members[i]));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& sorted_elems) {
  if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), g.identity())) return false;
  for (Elem a : sorted_elems) {
    if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), g.inv(a))) return false;
    for (Elem b : sorted_elems)
      if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), g.mul(a, b))) return false;
  }
  return true;
}

inline bool is_normal_subgroup(const FiniteGroup& g, const std::vector<Elem>& sorted_elems) {
  if (!is_subgroup(g, sorted_elems)) return false;
  for (Elem a : sorted_elems)
    for (Elem x = 0; x < g.order(); ++x)
      if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), g.conj(a, x))) return false;
  return true;
}

// [G, G], generated by all commutators; normality is checked.
inline std::vector<Elem> commutator_subgroup(const FiniteGroup& g) {
  std::vector<Elem> gens;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) gens.push_back(g.commutator(x, y));
  std::vector<Elem> out = subgroup_closure(g, gens);
  if (!is_normal_subgroup(g, out)) fail(Errc::ideal_closure_failed, "commutator subgroup is not normal");
  return out;
}

}  // namespace skewbrace
