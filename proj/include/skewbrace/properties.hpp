#pragma once

#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/perm.hpp"

namespace skewbrace {

// (B, o, .) must itself be a skew brace.
inline bool is_biskew_direct(const SkewBrace& b) {
  try {
    SkewBrace::validate(b.circ_table(), b.add_table());
    return true;
  } catch (const Error&) {
    return false;
  }
}

// gamma(y . z) = "apply gamma(z), then gamma(y)" for all y, z -- gamma is
// an anti-homomorphism from (B, .).
inline bool is_biskew_gamma(const SkewBrace& b) {
  for (Elem y = 0; y < b.order(); ++y)
    for (Elem z = 0; z < b.order(); ++z)
      if (!(b.gamma(b.mul(y, z)) == compose(b.gamma(z), b.gamma(y)))) return false;
  return true;
}

// Both characterisations, with disagreement treated as an internal error:
// it would contradict the equivalence they are proved to satisfy.
inline bool is_biskew(const SkewBrace& b) {
  bool direct = is_biskew_direct(b);
  bool via_gamma = is_biskew_gamma(b);
  if (direct != via_gamma)
    fail(Errc::invariance_violation, "bi-skew characterisations disagree on a validated brace");
  return direct;
}

// gamma(x . y) = "apply gamma(x), then gamma(y)" for all x, y -- gamma is
// a homomorphism from (B, .).
inline bool is_lambda_homomorphic(const SkewBrace& b) {
  for (Elem x = 0; x < b.order(); ++x)
    for (Elem y = 0; y < b.order(); ++y)
      if (!(b.gamma(b.mul(x, y)) == compose(b.gamma(x), b.gamma(y)))) return false;
  return true;
}

struct InnerResult {
  bool inner = false;
  // witnesses[y] = minimal t with gamma(y) = conjugation by t; only
  // meaningful when inner is true.
  std::vector<Elem> witnesses;
};

// Every gamma(y) must be x -> t^{-1} . x . t for some t depending on y.
inline InnerResult is_inner(const SkewBrace& b) {
  InnerResult r;
  r.witnesses.assign(static_cast<size_t>(b.order()), -1);
  for (Elem y = 0; y < b.order(); ++y) {
    for (Elem t = 0; t < b.order(); ++t) {
      bool match = true;
      for (Elem x = 0; x < b.order() && match; ++x) match = b.gamma(y)(x) == b.additive().conj(x, t);
      if (match) {
        r.witnesses[static_cast<size_t>(y)] = t;
        break;
      }
    }
    if (r.witnesses[static_cast<size_t>(y)] < 0) return {false, {}};
  }
  r.inner = true;
  return r;
}

struct PredicateTriple {
  bool biskew = false;
  bool lambda_homomorphic = false;
  bool inner = false;

  friend bool operator==(const PredicateTriple&, const PredicateTriple&) = default;
};

inline PredicateTriple predicates(const SkewBrace& b) {
  return {is_biskew(b), is_lambda_homomorphic(b), is_inner(b).inner};
}

}  // namespace skewbrace
