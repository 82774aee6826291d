#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/automorphism.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/parallel.hpp"
#include "skewbrace/properties.hpp"
#include "skewbrace/structure.hpp"

namespace skewbrace {

// All bijections preserving both operations, in canonical order.
inline std::vector<Perm> brace_isomorphisms(const SkewBrace& b1, const SkewBrace& b2) {
  std::vector<Perm> out;
  if (b1.order() != b2.order()) return out;
  for (const Perm& f : isomorphisms(b1.additive(), b2.additive())) {
    bool ok = true;
    for (Elem x = 0; x < b1.order() && ok; ++x)
      for (Elem y = 0; y < b1.order() && ok; ++y) ok = f(b1.circ(x, y)) == b2.circ(f(x), f(y));
    if (ok) out.push_back(f);
  }
  return out;
}

// xi : B1/Ann(B1) -> B2/Ann(B2) on coset indices,
// theta : B1' -> B2' on local indices of the embedded derived braces.
struct Isoclinism {
  Perm xi;
  Perm theta;
};

// Everything a pairwise isoclinism test needs, computed once per brace.
struct BraceContext {
  SkewBrace brace;
  SubBrace ann;
  QuotientBrace quot;        // over ann
  SubBrace derived;
  EmbeddedBrace derived_emb;
  PredicateTriple preds;
  std::vector<int> fingerprint;  // isoclinism invariants for pruning
};

namespace detail {

inline std::vector<int> sorted_orders(const FiniteGroup& g) {
  std::vector<int> v = g.element_orders();
  std::sort(v.begin(), v.end());
  return v;
}

// Brace-isomorphism invariants of the two corner objects.  Isoclinic
// braces share these because xi and theta are brace isomorphisms; note
// the parent order and |Ann| are deliberately absent (isoclinism can
// relate braces of different orders).
inline std::vector<int> isoclinism_fingerprint(const SkewBrace& quotient, const SkewBrace& derived) {
  std::vector<int> f;
  for (const SkewBrace* b : {&quotient, &derived}) {
    f.push_back(b->order());
    for (int v : sorted_orders(b->additive())) f.push_back(v);
    f.push_back(-1);
    for (int v : sorted_orders(b->multiplicative())) f.push_back(v);
    f.push_back(-1);
    PredicateTriple p = predicates(*b);
    f.push_back(p.biskew ? 1 : 0);
    f.push_back(p.lambda_homomorphic ? 1 : 0);
    f.push_back(p.inner ? 1 : 0);
    f.push_back(static_cast<int>(kernel_gamma(*b).size()));
    f.push_back(static_cast<int>(annihilator(*b).elements.size()));
    f.push_back(-2);
  }
  return f;
}

}  // namespace detail

inline BraceContext make_context(SkewBrace b) {
  SubBrace ann = annihilator(b);
  QuotientBrace quot = quotient_by(b, ann);
  SubBrace derived = derived_ideal(b);
  EmbeddedBrace emb = sub_brace_as_brace(b, derived);
  PredicateTriple preds = predicates(b);
  std::vector<int> fp = detail::isoclinism_fingerprint(quot.quotient, emb.brace);
  return BraceContext{std::move(b), std::move(ann), std::move(quot), std::move(derived), std::move(emb), preds,
                      std::move(fp)};
}

namespace detail {

// theta transported to parent element indices: D1-element v -> D2-element.
inline Elem theta_on_parent(const BraceContext& a, const BraceContext& b, const Perm& theta, Elem v) {
  int local = a.derived_emb.from_parent[static_cast<size_t>(v)];
  if (local < 0) fail(Errc::not_well_defined, "bracket value escapes the derived ideal");
  return b.derived_emb.to_parent[static_cast<size_t>(theta(local))];
}

// Both commuting squares, checked over every coset pair through the
// canonical representatives (brackets are representative-independent).
inline bool squares_commute(const BraceContext& a, const BraceContext& b, const Perm& xi, const Perm& theta) {
  const int m = a.quot.num_cosets();
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      Elem x = a.quot.reps[static_cast<size_t>(p)];
      Elem y = a.quot.reps[static_cast<size_t>(q)];
      Elem x2 = b.quot.reps[static_cast<size_t>(xi(p))];
      Elem y2 = b.quot.reps[static_cast<size_t>(xi(q))];
      if (theta_on_parent(a, b, theta, a.brace.additive().commutator(x, y)) !=
          b.brace.additive().commutator(x2, y2))
        return false;
      if (theta_on_parent(a, b, theta, star(a.brace, x, y)) != star(b.brace, x2, y2)) return false;
    }
  return true;
}

}  // namespace detail

// Witness search: xi over brace isomorphisms of the annihilator
// quotients, theta over brace isomorphisms of the derived ideals, both in
// canonical order; the first pair making the diagram commute is returned.
inline std::optional<Isoclinism> is_isoclinic(const BraceContext& a, const BraceContext& b) {
  if (a.fingerprint != b.fingerprint) return std::nullopt;
  std::vector<Perm> xis = brace_isomorphisms(a.quot.quotient, b.quot.quotient);
  if (xis.empty()) return std::nullopt;
  std::vector<Perm> thetas = brace_isomorphisms(a.derived_emb.brace, b.derived_emb.brace);
  if (thetas.empty()) return std::nullopt;
  for (const Perm& xi : xis)
    for (const Perm& theta : thetas)
      if (detail::squares_commute(a, b, xi, theta)) return Isoclinism{xi, theta};
  return std::nullopt;
}

inline std::optional<Isoclinism> is_isoclinic(const SkewBrace& b1, const SkewBrace& b2) {
  return is_isoclinic(make_context(b1), make_context(b2));
}

struct VerifyResult {
  bool ok = true;
  std::string violation;
};

// Re-check every invariant of a claimed isoclinism exhaustively: shapes,
// both isomorphism laws, gammabar equivariance (derivable, checked
// anyway), and both squares over all element pairs of B1.
inline VerifyResult verify_isoclinism(const BraceContext& a, const BraceContext& b, const Isoclinism& pair) {
  auto reject = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  const SkewBrace& q1 = a.quot.quotient;
  const SkewBrace& q2 = b.quot.quotient;
  const SkewBrace& d1 = a.derived_emb.brace;
  const SkewBrace& d2 = b.derived_emb.brace;
  if (pair.xi.degree() != q1.order() || q1.order() != q2.order())
    return reject("xi does not match the quotient sizes");
  if (pair.theta.degree() != d1.order() || d1.order() != d2.order())
    return reject("theta does not match the derived ideal sizes");
  for (Elem x = 0; x < q1.order(); ++x)
    for (Elem y = 0; y < q1.order(); ++y) {
      if (pair.xi(q1.mul(x, y)) != q2.mul(pair.xi(x), pair.xi(y)))
        return reject("xi breaks the additive quotient operation at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (pair.xi(q1.circ(x, y)) != q2.circ(pair.xi(x), pair.xi(y)))
        return reject("xi breaks the multiplicative quotient operation at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  for (Elem x = 0; x < d1.order(); ++x)
    for (Elem y = 0; y < d1.order(); ++y) {
      if (pair.theta(d1.mul(x, y)) != d2.mul(pair.theta(x), pair.theta(y)))
        return reject("theta breaks the additive ideal operation at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (pair.theta(d1.circ(x, y)) != d2.circ(pair.theta(x), pair.theta(y)))
        return reject("theta breaks the multiplicative ideal operation at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  // gammabar equivariance follows from xi preserving both operations.
  for (Elem y = 0; y < q1.order(); ++y)
    for (Elem x = 0; x < q1.order(); ++x)
      if (pair.xi(q1.gamma(y)(x)) != q2.gamma(pair.xi(y))(pair.xi(x)))
        return reject("xi is not gammabar-equivariant at (" + std::to_string(x) + "," + std::to_string(y) + ")");
  // Both squares over all element pairs, not just representatives.
  for (Elem x = 0; x < a.brace.order(); ++x)
    for (Elem y = 0; y < a.brace.order(); ++y) {
      int p = a.quot.coset_of(x), q = a.quot.coset_of(y);
      Elem x2 = b.quot.reps[static_cast<size_t>(pair.xi(p))];
      Elem y2 = b.quot.reps[static_cast<size_t>(pair.xi(q))];
      Elem lhs_add = detail::theta_on_parent(a, b, pair.theta, a.brace.additive().commutator(x, y));
      if (lhs_add != b.brace.additive().commutator(x2, y2))
        return reject("additive square fails on coset pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
      Elem lhs_star = detail::theta_on_parent(a, b, pair.theta, star(a.brace, x, y));
      if (lhs_star != star(b.brace, x2, y2))
        return reject("star square fails on coset pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  return {};
}

inline VerifyResult verify_isoclinism(const SkewBrace& b1, const SkewBrace& b2, const Isoclinism& pair) {
  return verify_isoclinism(make_context(b1), make_context(b2), pair);
}

// Remark checks attached to a verified isoclinism: [B,B]_o lands in B' on
// both sides, the multiplicative commutator descends to the quotients,
// and theta carries it across.
inline bool check_remark_2_15(const BraceContext& a, const BraceContext& b, const Isoclinism& pair) {
  for (const BraceContext* c : {&a, &b}) {
    for (Elem x = 0; x < c->brace.order(); ++x)
      for (Elem y = 0; y < c->brace.order(); ++y)
        if (c->derived_emb.from_parent[static_cast<size_t>(mult_commutator(c->brace, x, y))] < 0) return false;
    // representative independence over Ann
    for (Elem x = 0; x < c->brace.order(); ++x)
      for (Elem y = 0; y < c->brace.order(); ++y) {
        Elem base = mult_commutator(c->brace, x, y);
        for (Elem cc : c->ann.elements)
          for (Elem dd : c->ann.elements)
            if (mult_commutator(c->brace, c->brace.mul(x, cc), c->brace.mul(y, dd)) != base) return false;
      }
  }
  const int m = a.quot.num_cosets();
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      Elem x = a.quot.reps[static_cast<size_t>(p)];
      Elem y = a.quot.reps[static_cast<size_t>(q)];
      Elem x2 = b.quot.reps[static_cast<size_t>(pair.xi(p))];
      Elem y2 = b.quot.reps[static_cast<size_t>(pair.xi(q))];
      if (detail::theta_on_parent(a, b, pair.theta, mult_commutator(a.brace, x, y)) !=
          mult_commutator(b.brace, x2, y2))
        return false;
    }
  return true;
}

// On a bi-skew brace, [u, gamma(v . w)] must equal both the three-term
// commutator expansion and [u, "apply gamma(w), then gamma(v)"].
inline bool biskew_expansion_holds(const SkewBrace& b) {
  for (Elem u = 0; u < b.order(); ++u)
    for (Elem v = 0; v < b.order(); ++v)
      for (Elem w = 0; w < b.order(); ++w) {
        Elem lhs = gamma_commutator(b, u, b.mul(v, w));
        Elem t1 = gamma_commutator(b, u, v);
        Elem t2 = gamma_commutator(b, u, w);
        Elem t3 = gamma_commutator(b, t2, v);
        Elem expansion = b.mul(b.mul(t1, t2), t3);
        Perm composite = compose(b.gamma(w), b.gamma(v));
        Elem direct = b.mul(b.inv(u), composite(u));
        if (lhs != expansion || lhs != direct) return false;
      }
  return true;
}

// Hall's notion transplanted to braces: only the additive square, with xi
// and theta mere isomorphisms of the additive corner groups.
inline bool additively_isoclinic(const BraceContext& a, const BraceContext& b) {
  std::vector<Perm> xis = isomorphisms(a.quot.quotient.additive(), b.quot.quotient.additive());
  if (xis.empty()) return false;
  std::vector<Perm> thetas = isomorphisms(a.derived_emb.brace.additive(), b.derived_emb.brace.additive());
  if (thetas.empty()) return false;
  const int m = a.quot.num_cosets();
  for (const Perm& xi : xis)
    for (const Perm& theta : thetas) {
      bool ok = true;
      for (int p = 0; p < m && ok; ++p)
        for (int q = 0; q < m && ok; ++q) {
          Elem x = a.quot.reps[static_cast<size_t>(p)];
          Elem y = a.quot.reps[static_cast<size_t>(q)];
          Elem x2 = b.quot.reps[static_cast<size_t>(xi(p))];
          Elem y2 = b.quot.reps[static_cast<size_t>(xi(q))];
          Elem v = a.brace.additive().commutator(x, y);
          int local = a.derived_emb.from_parent[static_cast<size_t>(v)];
          ok = local >= 0 &&
               b.derived_emb.to_parent[static_cast<size_t>(theta(local))] == b.brace.additive().commutator(x2, y2);
        }
      if (ok) return true;
    }
  return false;
}

// ---- classification ---------------------------------------------------------

struct Classification {
  std::vector<std::vector<int>> classes;                 // sorted members; classes by least member
  std::vector<int> class_of;                             // brace index -> class index
  std::map<std::pair<int, int>, Isoclinism> witnesses;   // every intra-class pair (i < j)
};

// Partition under is_isoclinic; the relation is re-checked to be an
// equivalence on the result (a failure is a search bug, not mathematics).
inline Classification classify(const std::vector<BraceContext>& braces, int jobs = 1) {
  const int n = static_cast<int>(braces.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<std::optional<Isoclinism>> result(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), jobs, [&](int k) {
    result[static_cast<size_t>(k)] =
        is_isoclinic(braces[static_cast<size_t>(pairs[static_cast<size_t>(k)].first)],
                     braces[static_cast<size_t>(pairs[static_cast<size_t>(k)].second)]);
  });
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  Classification out;
  for (size_t k = 0; k < pairs.size(); ++k) {
    if (!result[k]) continue;
    out.witnesses.emplace(pairs[k], *result[k]);
    int ra = find(pairs[k].first), rb = find(pairs[k].second);
    if (ra != rb) parent[static_cast<size_t>(ra > rb ? ra : rb)] = ra < rb ? ra : rb;
  }
  // Transitivity audit: every intra-class pair must have its own witness.
  for (size_t k = 0; k < pairs.size(); ++k)
    if (!result[k] && find(pairs[k].first) == find(pairs[k].second))
      fail(Errc::transitivity_violation,
           "braces " + std::to_string(pairs[k].first) + " and " + std::to_string(pairs[k].second) +
               " share a class but no witness was found");
  std::map<int, std::vector<int>> grouped;
  for (int i = 0; i < n; ++i) grouped[find(i)].push_back(i);
  out.class_of.assign(static_cast<size_t>(n), -1);
  for (auto& kv : grouped) {
    for (int m : kv.second) out.class_of[static_cast<size_t>(m)] = static_cast<int>(out.classes.size());
    out.classes.push_back(kv.second);
  }
  return out;
}

// ---- the headline report ----------------------------------------------------

struct WitnessRecord {
  int from = 0, to = 0;
  Isoclinism pair;
};

struct ClassReport {
  int id = 0;
  std::vector<int> members;
  PredicateTriple preds;
  std::vector<WitnessRecord> witnesses;
};

struct TheoremReport {
  std::vector<ClassReport> classes;
  std::vector<std::string> violations;
  // pairs isoclinic in the additive-square-only sense but not as braces
  std::vector<std::pair<int, int>> additive_only_pairs;
  int remark_pairs_checked = 0;
  int expansion_scans = 0;

  bool ok() const { return violations.empty(); }
};

// For every isoclinism class of the census: the three predicates must be
// constant; every witness re-verifies, carries the multiplicative
// commutator, and (on bi-skew classes) satisfies the commutator
// expansion identities on both endpoints.
inline TheoremReport theorem_invariance_report(const std::vector<BraceContext>& braces, int jobs = 1) {
  TheoremReport report;
  Classification cls = classify(braces, jobs);
  for (size_t c = 0; c < cls.classes.size(); ++c) {
    ClassReport cr;
    cr.id = static_cast<int>(c);
    cr.members = cls.classes[c];
    cr.preds = braces[static_cast<size_t>(cr.members.front())].preds;
    for (int m : cr.members) {
      const PredicateTriple& p = braces[static_cast<size_t>(m)].preds;
      if (!(p == cr.preds))
        report.violations.push_back("class " + std::to_string(c) + ": predicate triple of brace " +
                                    std::to_string(m) + " differs from brace " + std::to_string(cr.members.front()));
    }
    for (const auto& kv : cls.witnesses) {
      if (cls.class_of[static_cast<size_t>(kv.first.first)] != static_cast<int>(c)) continue;
      const BraceContext& a = braces[static_cast<size_t>(kv.first.first)];
      const BraceContext& b = braces[static_cast<size_t>(kv.first.second)];
      VerifyResult vr = verify_isoclinism(a, b, kv.second);
      if (!vr.ok)
        report.violations.push_back("witness " + std::to_string(kv.first.first) + "->" +
                                    std::to_string(kv.first.second) + " fails verification: " + vr.violation);
      if (!check_remark_2_15(a, b, kv.second))
        report.violations.push_back("witness " + std::to_string(kv.first.first) + "->" +
                                    std::to_string(kv.first.second) + " fails the multiplicative-commutator checks");
      ++report.remark_pairs_checked;
      if (a.preds.biskew) {
        if (!biskew_expansion_holds(a.brace) || !biskew_expansion_holds(b.brace))
          report.violations.push_back("commutator expansion fails on witness pair " +
                                      std::to_string(kv.first.first) + "->" + std::to_string(kv.first.second));
        ++report.expansion_scans;
      }
      cr.witnesses.push_back(WitnessRecord{kv.first.first, kv.first.second, kv.second});
    }
    report.classes.push_back(std::move(cr));
  }
  // Pairs where Hall's additive-only notion and the full notion differ.
  for (int i = 0; i < static_cast<int>(braces.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(braces.size()); ++j) {
      if (cls.class_of[static_cast<size_t>(i)] == cls.class_of[static_cast<size_t>(j)]) continue;
      if (additively_isoclinic(braces[static_cast<size_t>(i)], braces[static_cast<size_t>(j)]))
        report.additive_only_pairs.push_back({i, j});
    }
  return report;
}

}  // namespace skewbrace
