#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/automorphism.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/holomorph.hpp"
#include "skewbrace/parallel.hpp"

namespace skewbrace {

inline constexpr int kDefaultHolomorphCap = 16;

namespace detail {

// Composition indices over a fixed automorphism list; tabulated when the
// square fits, looked up through a map otherwise.
class AutIndex {
 public:
  explicit AutIndex(const std::vector<Perm>& auts) : auts_(auts) {
    for (int i = 0; i < static_cast<int>(auts.size()); ++i) index_[auts[static_cast<size_t>(i)].images()] = i;
    if (auts.size() * auts.size() <= (1u << 22)) {
      table_.assign(auts.size() * auts.size(), -1);
      for (size_t i = 0; i < auts.size(); ++i)
        for (size_t j = 0; j < auts.size(); ++j)
          table_[i * auts.size() + j] = index_.at(compose(auts_[i], auts_[j]).images());
    }
  }

  int size() const { return static_cast<int>(auts_.size()); }

  // index of "apply auts[i], then auts[j]"
  int compose_idx(int i, int j) const {
    if (!table_.empty()) return table_[static_cast<size_t>(i) * auts_.size() + static_cast<size_t>(j)];
    return index_.at(compose(auts_[static_cast<size_t>(i)], auts_[static_cast<size_t>(j)]).images());
  }

 private:
  const std::vector<Perm>& auts_;
  std::map<std::vector<Elem>, int> index_;
  std::vector<int> table_;
};

struct GammaSearch {
  const FiniteGroup& g;
  const std::vector<Perm>& auts;
  const AutIndex& comp;
  std::vector<int> assign;          // element -> automorphism index, -1 unassigned
  std::vector<Elem> assigned;       // assignment order
  std::vector<std::vector<int>> results;

  GammaSearch(const FiniteGroup& g_, const std::vector<Perm>& auts_, const AutIndex& comp_)
      : g(g_), auts(auts_), comp(comp_), assign(static_cast<size_t>(g_.order()), -1) {}

  // Fix gamma(x); propagate every instance of the functional equation
  // involving two assigned elements.  Returns false on conflict, with the
  // assignment order recording everything set since the caller's mark.
  // Every popped element is paired against the whole assignment list as
  // it stands, which covers each pair once both sides are known.
  bool set_and_propagate(Elem x0, int a0) {
    size_t head = assigned.size();
    assign[static_cast<size_t>(x0)] = a0;
    assigned.push_back(x0);
    while (head < assigned.size()) {
      Elem x = assigned[head++];
      for (size_t k = 0; k < assigned.size(); ++k) {  // size grows as derive() fires
        Elem y = assigned[k];
        if (!derive(x, y) || !derive(y, x)) return false;
      }
    }
    return true;
  }

  bool derive(Elem x, Elem y) {
    int ax = assign[static_cast<size_t>(x)], ay = assign[static_cast<size_t>(y)];
    Elem z = g.mul(auts[static_cast<size_t>(ax)](y), x);
    int forced = comp.compose_idx(ay, ax);
    int& slot = assign[static_cast<size_t>(z)];
    if (slot < 0) {
      slot = forced;
      assigned.push_back(z);
      return true;
    }
    return slot == forced;
  }

  void undo_to(size_t mark) {
    while (assigned.size() > mark) {
      assign[static_cast<size_t>(assigned.back())] = -1;
      assigned.pop_back();
    }
  }

  void run() {
    Elem next = -1;
    for (Elem x = 0; x < g.order(); ++x)
      if (assign[static_cast<size_t>(x)] < 0) {
        next = x;
        break;
      }
    if (next < 0) {
      results.push_back(assign);
      return;
    }
    for (int a = 0; a < static_cast<int>(auts.size()); ++a) {
      size_t mark = assigned.size();
      if (set_and_propagate(next, a)) run();
      undo_to(mark);
    }
  }
};

}  // namespace detail

// All gamma functions on G satisfying the functional equation, found by
// backtracking with constraint propagation, each validated through
// circ_from_gamma.  Sorted by multiplication table.
inline std::vector<SkewBrace> enumerate_gammas(const FiniteGroup& g, int cap = kDefaultOrderCap) {
  if (g.order() > cap)
    fail(Errc::order_cap_exceeded, "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  AutomorphismGroup a = automorphism_group(g, cap);
  detail::AutIndex comp(a.elements);
  detail::GammaSearch search(g, a.elements, comp);
  if (!search.set_and_propagate(g.identity(), 0))
    fail(Errc::gfe_violation, "identity assignment is inconsistent");  // cannot happen
  search.run();
  std::vector<SkewBrace> out;
  out.reserve(search.results.size());
  for (const std::vector<int>& assign : search.results) {
    GammaFunction gamma;
    gamma.maps.reserve(static_cast<size_t>(g.order()));
    for (Elem x = 0; x < g.order(); ++x) gamma.maps.push_back(a.elements[static_cast<size_t>(assign[static_cast<size_t>(x)])]);
    out.push_back(circ_from_gamma(g, gamma));
  }
  std::sort(out.begin(), out.end(), [](const SkewBrace& l, const SkewBrace& r) {
    return l.circ_table().cells < r.circ_table().cells;
  });
  return out;
}

// Independent oracle: subgroups of Hol(B, .) of order |B| acting freely
// (equivalently, regularly) on B, found by generic subgroup growth over
// the fixed-point-free element pool.  Each subgroup yields the brace with
// y o x = f_x(y) . x where (f_x, x) is its unique element translating to x.
inline std::vector<SkewBrace> enumerate_via_holomorph(const FiniteGroup& g, int cap = kDefaultHolomorphCap) {
  const int n = g.order();
  if (n > cap)
    fail(Errc::order_cap_exceeded, "order " + std::to_string(n) + " exceeds holomorph cap " + std::to_string(cap));
  Holomorph hol = holomorph(g);
  const int hsize = hol.size();
  std::vector<char> fpf(static_cast<size_t>(hsize), 0);
  std::vector<int> pool;
  for (int h = 1; h < hsize; ++h)
    if (hol.fixed_point_free(h)) {
      fpf[static_cast<size_t>(h)] = 1;
      pool.push_back(h);
    }

  // closure of S + {h}; empty result signals "grew past n or swallowed an
  // element with a fixed point".
  std::vector<int> stamp(static_cast<size_t>(hsize), -1);
  int epoch = 0;
  auto closure = [&](const std::vector<int>& base, int extra) {
    ++epoch;
    std::vector<int> members;
    auto push = [&](int h) {
      if (stamp[static_cast<size_t>(h)] == epoch) return true;
      if (h != hol.identity() && !fpf[static_cast<size_t>(h)]) return false;
      stamp[static_cast<size_t>(h)] = epoch;
      members.push_back(h);
      return true;
    };
    push(hol.identity());
    for (int h : base) push(h);
    if (!push(extra)) return std::vector<int>{};
    for (size_t i = 0; i < members.size(); ++i) {
      if (static_cast<int>(members.size()) > n) return std::vector<int>{};
      for (size_t j = 0; j <= i; ++j) {
        if (!push(hol.mul(members[i], members[j]))) return std::vector<int>{};
        if (!push(hol.mul(members[j], members[i]))) return std::vector<int>{};
      }
    }
    if (static_cast<int>(members.size()) > n) return std::vector<int>{};
    std::sort(members.begin(), members.end());
    return members;
  };

  std::set<std::vector<int>> visited;
  std::vector<std::vector<int>> regular;
  if (n == 1) regular.push_back({hol.identity()});
  std::vector<std::vector<int>> stack{{hol.identity()}};
  visited.insert(stack.back());
  while (!stack.empty()) {
    std::vector<int> current = std::move(stack.back());
    stack.pop_back();
    for (int h : pool) {
      if (std::binary_search(current.begin(), current.end(), h)) continue;
      std::vector<int> grown = closure(current, h);
      if (grown.empty()) continue;
      if (!visited.insert(grown).second) continue;
      if (static_cast<int>(grown.size()) == n)
        regular.push_back(grown);
      else if (n % static_cast<int>(grown.size()) == 0)
        stack.push_back(std::move(grown));
    }
  }

  std::vector<SkewBrace> out;
  out.reserve(regular.size());
  for (const std::vector<int>& sub : regular) {
    std::vector<int> by_translation(static_cast<size_t>(n), -1);
    for (int h : sub) {
      Elem c = hol.elt_part(h);
      if (by_translation[static_cast<size_t>(c)] >= 0)
        fail(Errc::not_well_defined, "free subgroup repeats a translation part");  // cannot happen
      by_translation[static_cast<size_t>(c)] = h;
    }
    CayleyTable circ(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) circ.at(y, x) = hol.act(y, by_translation[static_cast<size_t>(x)]);
    out.push_back(SkewBrace::validate(g.table(), std::move(circ)));
  }
  std::sort(out.begin(), out.end(), [](const SkewBrace& l, const SkewBrace& r) {
    return l.circ_table().cells < r.circ_table().cells;
  });
  return out;
}

// ---- canonical form / dedup -------------------------------------------------

namespace detail {

// Lexicographically minimal concatenated (add, circ) tables over all
// relabelings fixing 0.  Branches only when a new row index needs an old
// preimage; fresh values are forced onto the smallest unused label.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SkewBrace& b)
      : n_(b.order()), add_(&b.add_table()), circ_(&b.circ_table()) {
    cells_.reserve(static_cast<size_t>(2 * (n_ - 1) * (n_ - 1)));
    for (int t = 0; t < 2; ++t)
      for (Elem a = 1; a < n_; ++a)
        for (Elem bb = 1; bb < n_; ++bb) cells_.push_back({t, a, bb});
    pi_.assign(static_cast<size_t>(n_), -1);
    sigma_.assign(static_cast<size_t>(n_), -1);
    pi_[0] = 0;
    sigma_[0] = 0;
    cur_.assign(cells_.size(), -1);
    descend(0, true);
  }

  // Rebuild both canonical tables from the winning cell string.
  std::pair<CayleyTable, CayleyTable> tables() const {
    CayleyTable add(n_, std::vector<Elem>(static_cast<size_t>(n_) * static_cast<size_t>(n_)));
    CayleyTable circ(n_, std::vector<Elem>(static_cast<size_t>(n_) * static_cast<size_t>(n_)));
    for (Elem i = 0; i < n_; ++i) {
      add.at(0, i) = add.at(i, 0) = i;
      circ.at(0, i) = circ.at(i, 0) = i;
    }
    size_t pos = 0;
    for (int t = 0; t < 2; ++t)
      for (Elem a = 1; a < n_; ++a)
        for (Elem bb = 1; bb < n_; ++bb) {
          (t == 0 ? add : circ).at(a, bb) = best_[pos];
          ++pos;
        }
    return {std::move(add), std::move(circ)};
  }

  const std::vector<Elem>& key() const { return best_; }

 private:
  struct Cell {
    int table;
    Elem a, b;
  };

  Elem raw(int table, Elem i, Elem j) const { return table == 0 ? add_->at(i, j) : circ_->at(i, j); }

  void descend(size_t pos, bool tight) {
    if (pos == cells_.size()) {
      if (best_.empty() || cur_ < best_) best_ = cur_;
      return;
    }
    const Cell& c = cells_[pos];
    if (pi_[static_cast<size_t>(c.a)] < 0) {
      branch_row(c.a, pos, tight);
      return;
    }
    if (pi_[static_cast<size_t>(c.b)] < 0) {
      branch_row(c.b, pos, tight);
      return;
    }
    Elem v_old = raw(c.table, pi_[static_cast<size_t>(c.a)], pi_[static_cast<size_t>(c.b)]);
    Elem v = sigma_[static_cast<size_t>(v_old)];
    bool forced = false;
    if (v < 0) {
      // smallest unused new label; any other choice is strictly worse here
      for (Elem w = 1; w < n_; ++w)
        if (pi_[static_cast<size_t>(w)] < 0) {
          v = w;
          break;
        }
      sigma_[static_cast<size_t>(v_old)] = v;
      pi_[static_cast<size_t>(v)] = v_old;
      forced = true;
    }
    bool ok = true;
    bool next_tight = tight;
    if (tight && !best_.empty()) {
      if (v > best_[pos]) ok = false;
      else if (v < best_[pos]) next_tight = false;
    }
    if (ok) {
      cur_[pos] = v;
      descend(pos + 1, next_tight);
    }
    if (forced) {
      pi_[static_cast<size_t>(sigma_[static_cast<size_t>(v_old)])] = -1;
      sigma_[static_cast<size_t>(v_old)] = -1;
    }
  }

  void branch_row(Elem row, size_t pos, bool tight) {
    for (Elem u = 1; u < n_; ++u) {
      if (sigma_[static_cast<size_t>(u)] >= 0) continue;
      pi_[static_cast<size_t>(row)] = u;
      sigma_[static_cast<size_t>(u)] = row;
      descend(pos, tight);
      pi_[static_cast<size_t>(row)] = -1;
      sigma_[static_cast<size_t>(u)] = -1;
    }
  }

  int n_;
  const CayleyTable* add_;
  const CayleyTable* circ_;
  std::vector<Cell> cells_;
  std::vector<Elem> pi_;     // new -> old
  std::vector<Elem> sigma_;  // old -> new
  std::vector<Elem> cur_;
  std::vector<Elem> best_;
};

}  // namespace detail

// Minimal concatenated-table form among all relabelings fixing 0.  Two
// braces are isomorphic exactly when their canonical forms coincide.
inline std::pair<CayleyTable, CayleyTable> canonical_form(const SkewBrace& b) {
  if (b.order() == 1) return {b.add_table(), b.circ_table()};
  return detail::CanonicalSearch(b).tables();
}

inline SkewBrace canonicalize(const SkewBrace& b) {
  auto [add, circ] = canonical_form(b);
  return SkewBrace::validate(std::move(add), std::move(circ));
}

// One canonical representative per brace-isomorphism class, sorted by
// order then canonical tables.
inline std::vector<SkewBrace> dedup_up_to_iso(const std::vector<SkewBrace>& braces) {
  std::map<std::pair<int, std::pair<std::vector<Elem>, std::vector<Elem>>>, SkewBrace> reps;
  for (const SkewBrace& b : braces) {
    auto [add, circ] = canonical_form(b);
    auto key = std::make_pair(b.order(), std::make_pair(add.cells, circ.cells));
    if (reps.find(key) == reps.end())
      reps.emplace(std::move(key), SkewBrace::validate(std::move(add), std::move(circ)));
  }
  std::vector<SkewBrace> out;
  out.reserve(reps.size());
  for (auto& kv : reps) out.push_back(std::move(kv.second));
  return out;
}

// The complete census of one order: every gamma function over every
// catalog group, deduplicated up to brace isomorphism.
inline std::vector<SkewBrace> census(int order, int jobs = 1, int cap = kDefaultOrderCap) {
  const std::vector<NamedGroup>& groups = group_catalog(order);
  std::vector<std::vector<SkewBrace>> per_group(groups.size());
  parallel_for(static_cast<int>(groups.size()), jobs,
               [&](int i) { per_group[static_cast<size_t>(i)] = enumerate_gammas(groups[static_cast<size_t>(i)].group, cap); });
  std::vector<SkewBrace> all;
  for (auto& v : per_group)
    for (auto& b : v) all.push_back(std::move(b));
  return dedup_up_to_iso(all);
}

}  // namespace skewbrace
