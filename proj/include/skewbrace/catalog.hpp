#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/error.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/perm.hpp"

namespace skewbrace {

// ---- explicit constructions ------------------------------------------------

inline FiniteGroup cyclic_group(int n) {
  CayleyTable t(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) t.at(i, j) = (i + j) % n;
  return FiniteGroup(std::move(t));
}

// Index convention: (a, b) -> a * |B| + b, identity (0,0) at index 0.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  CayleyTable t(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      Elem ia = i / b.order(), ib = i % b.order();
      Elem ja = j / b.order(), jb = j % b.order();
      t.at(i, j) = a.mul(ia, ja) * b.order() + b.mul(ib, jb);
    }
  return FiniteGroup(std::move(t));
}

// <r, s | r^m = s^k = 1, s r s^{-1} = r^q>, elements r^i s^j at j*m + i.
// Needs q^k = 1 (mod m); covers cyclic products (q = 1), dihedral
// (q = m-1), semidihedral and modular families.
inline FiniteGroup metacyclic_group(int m, int k, int q) {
  const int n = m * k;
  auto powq = [&](int j) {
    long long p = 1;
    for (int t = 0; t < j; ++t) p = (p * q) % m;
    return static_cast<int>(p);
  };
  CayleyTable t(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
  for (int j1 = 0; j1 < k; ++j1)
    for (int i1 = 0; i1 < m; ++i1)
      for (int j2 = 0; j2 < k; ++j2)
        for (int i2 = 0; i2 < m; ++i2) {
          int i = (i1 + i2 * powq(j1)) % m;
          int j = (j1 + j2) % k;
          t.at(j1 * m + i1, j2 * m + i2) = j * m + i;
        }
  return FiniteGroup(std::move(t));
}

inline FiniteGroup dihedral_group(int n) { return metacyclic_group(n, 2, n - 1); }  // order 2n

// <a, b | a^{2t} = 1, b^2 = a^t, b a b^{-1} = a^{-1}>, order 4t.
// Elements a^i b^j at j*2t + i.  t = 2 gives Q8, t = 4 gives Q16.
inline FiniteGroup dicyclic_group(int t) {
  const int m = 2 * t;
  const int n = 4 * t;
  CayleyTable tab(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < m; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < m; ++i2) {
          int i, j;
          if (j1 == 0) {
            i = (i1 + i2) % m;
            j = j2;
          } else if (j2 == 0) {
            i = ((i1 - i2) % m + m) % m;
            j = 1;
          } else {
            i = (((i1 - i2 + t) % m) + m) % m;
            j = 0;
          }
          tab.at(j1 * m + i1, j2 * m + i2) = j * m + i;
        }
  return FiniteGroup(std::move(tab));
}

inline FiniteGroup quaternion_group() { return dicyclic_group(2); }
inline FiniteGroup klein_four_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }
inline FiniteGroup symmetric3_group() { return dihedral_group(3); }

// Even permutations of 4 points, indexed in lexicographic image order
// (identity first), multiplied left-to-right.
inline FiniteGroup alternating4_group() {
  std::vector<std::vector<Elem>> elems;
  std::vector<Elem> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<Elem>, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[static_cast<size_t>(i)]] = i;
  const int n = 12;
  CayleyTable t(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Elem> prod(4);
      for (int x = 0; x < 4; ++x)
        prod[static_cast<size_t>(x)] =
            elems[static_cast<size_t>(j)][static_cast<size_t>(elems[static_cast<size_t>(i)][static_cast<size_t>(x)])];
      t.at(i, j) = index.at(prod);
    }
  return FiniteGroup(std::move(t));
}

// N |x H with H acting through `action` (action[h] an automorphism of N,
// action[0] must be the identity).  Elements (a, h) at h*|N| + a.
inline FiniteGroup semidirect_product(const FiniteGroup& nsub, const FiniteGroup& hsub,
                                      const std::vector<Perm>& action) {
  const int n = nsub.order() * hsub.order();
  CayleyTable t(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      Elem a1 = i % nsub.order(), h1 = i / nsub.order();
      Elem a2 = j % nsub.order(), h2 = j / nsub.order();
      Elem a = nsub.mul(a1, action[static_cast<size_t>(h1)](a2));
      Elem h = hsub.mul(h1, h2);
      t.at(i, j) = h * nsub.order() + a;
    }
  return FiniteGroup(std::move(t));
}

// G / Z for a central (or any normal) subgroup Z, as an explicit table on
// coset indices ordered by minimal representative.
inline FiniteGroup group_quotient(const FiniteGroup& g, const std::vector<Elem>& normal_sorted) {
  if (!is_normal_subgroup(g, normal_sorted)) fail(Errc::ideal_closure_failed, "quotient by a non-normal subset");
  std::vector<int> proj(static_cast<size_t>(g.order()), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (proj[static_cast<size_t>(x)] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem c : normal_sorted) proj[static_cast<size_t>(g.mul(x, c))] = idx;
  }
  const int m = static_cast<int>(reps.size());
  CayleyTable t(m, std::vector<Elem>(static_cast<size_t>(m) * static_cast<size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      t.at(a, b) = proj[static_cast<size_t>(g.mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]))];
  return FiniteGroup(std::move(t));
}

// ---- the catalog -----------------------------------------------------------

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

namespace detail {

// (C2 x C2) |x C4, the generator of C4 swapping the two factors.
inline FiniteGroup swap_semidirect_group() {
  FiniteGroup v4 = klein_four_group();  // index = a*2 + b
  FiniteGroup c4 = cyclic_group(4);
  Perm swap(std::vector<Elem>{0, 2, 1, 3});
  std::vector<Perm> action{Perm::identity(4), swap, Perm::identity(4), swap};
  return semidirect_product(v4, c4, action);
}

// C4 o D4: central product identifying the order-2 subgroups of both
// centres, i.e. (D4 x C4) / <(r^2, 2)>.
inline FiniteGroup pauli_group() {
  FiniteGroup d4 = metacyclic_group(4, 2, 3);
  FiniteGroup c4 = cyclic_group(4);
  FiniteGroup prod = direct_product(d4, c4);  // (d, c) at d*4 + c
  Elem r2 = 2;                                // r^2 in the metacyclic indexing
  std::vector<Elem> z{0, r2 * 4 + 2};
  return group_quotient(prod, z);
}

inline std::vector<NamedGroup> build_order(int order) {
  auto C = [](int k) { return cyclic_group(k); };
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, FiniteGroup g) {
    if (g.order() != order) fail(Errc::unknown_order, "catalog construction for " + name + " has wrong order");
    out.push_back({std::move(name), std::move(g)});
  };
  switch (order) {
    case 1: add("C1", C(1)); break;
    case 2: add("C2", C(2)); break;
    case 3: add("C3", C(3)); break;
    case 4:
      add("C4", C(4));
      add("C2xC2", klein_four_group());
      break;
    case 5: add("C5", C(5)); break;
    case 6:
      add("C6", C(6));
      add("S3", symmetric3_group());
      break;
    case 7: add("C7", C(7)); break;
    case 8:
      add("C8", C(8));
      add("C4xC2", direct_product(C(4), C(2)));
      add("C2xC2xC2", direct_product(klein_four_group(), C(2)));
      add("D4", metacyclic_group(4, 2, 3));
      add("Q8", quaternion_group());
      break;
    case 9:
      add("C9", C(9));
      add("C3xC3", direct_product(C(3), C(3)));
      break;
    case 10:
      add("C10", C(10));
      add("D5", dihedral_group(5));
      break;
    case 11: add("C11", C(11)); break;
    case 12:
      add("C12", C(12));
      add("C6xC2", direct_product(C(6), C(2)));
      add("D6", dihedral_group(6));
      add("A4", alternating4_group());
      add("Dic3", dicyclic_group(3));
      break;
    case 13: add("C13", C(13)); break;
    case 14:
      add("C14", C(14));
      add("D7", dihedral_group(7));
      break;
    case 15: add("C15", C(15)); break;
    case 16:
      add("C16", C(16));
      add("C8xC2", direct_product(C(8), C(2)));
      add("C4xC4", direct_product(C(4), C(4)));
      add("C4xC2xC2", direct_product(C(4), klein_four_group()));
      add("C2xC2xC2xC2", direct_product(klein_four_group(), klein_four_group()));
      add("D8", dihedral_group(8));
      add("SD16", metacyclic_group(8, 2, 3));
      add("M4(2)", metacyclic_group(8, 2, 5));
      add("Q16", dicyclic_group(4));
      add("C4:C4", metacyclic_group(4, 4, 3));
      add("C2xC2:C4", swap_semidirect_group());
      add("D4xC2", direct_product(metacyclic_group(4, 2, 3), C(2)));
      add("Q8xC2", direct_product(quaternion_group(), C(2)));
      add("C4oD4", pauli_group());
      break;
    default:
      fail(Errc::unknown_order, "no catalog entry for order " + std::to_string(order));
  }
  return out;
}

}  // namespace detail

inline constexpr int kMaxCatalogOrder = 16;

// All groups of the given order (1..16), explicit tables with identity 0.
inline const std::vector<NamedGroup>& group_catalog(int order) {
  if (order < 1 || order > kMaxCatalogOrder)
    fail(Errc::unknown_order, "no catalog entry for order " + std::to_string(order));
  static std::map<int, std::vector<NamedGroup>> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, detail::build_order(order)).first;
  return it->second;
}

}  // namespace skewbrace
