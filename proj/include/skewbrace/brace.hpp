#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewbrace/error.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/perm.hpp"

namespace skewbrace {

// gamma(x) : y -> (y o x) * x^{-1}, one permutation per element.
struct GammaFunction {
  std::vector<Perm> maps;

  int degree() const { return maps.empty() ? 0 : maps.front().degree(); }
  friend bool operator==(const GammaFunction&, const GammaFunction&) = default;
};

struct GfeResult {
  bool ok = true;
  Elem x = -1;  // first violating pair when !ok
  Elem y = -1;
};

// Functional equation: gamma(gamma(x)(y) * x) = "apply gamma(y), then
// gamma(x)", for all x, y.  The maps need not be automorphisms here.
inline GfeResult check_gfe(const FiniteGroup& g, const GammaFunction& gamma) {
  const int n = g.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Perm& gx = gamma.maps[static_cast<size_t>(x)];
      const Perm& gy = gamma.maps[static_cast<size_t>(y)];
      Elem z = g.mul(gx(y), x);
      const Perm& gz = gamma.maps[static_cast<size_t>(z)];
      for (Elem t = 0; t < n; ++t)
        if (gz(t) != gx(gy(t))) return {false, x, y};
    }
  return {};
}

// A validated right skew brace (B, ., o): two groups on the same index
// set sharing identity 0, with every map y -> (y o x) * x^{-1} an
// automorphism of (B, .).  Gamma is extracted and cached on construction.
class SkewBrace {
 public:
  static SkewBrace validate(CayleyTable add, CayleyTable circ) {
    return SkewBrace(std::move(add), std::move(circ));
  }

  int order() const { return add_.order(); }

  const FiniteGroup& additive() const { return add_; }
  const FiniteGroup& multiplicative() const { return circ_; }

  Elem mul(Elem a, Elem b) const { return add_.mul(a, b); }       // a . b
  Elem circ(Elem a, Elem b) const { return circ_.mul(a, b); }     // a o b
  Elem inv(Elem a) const { return add_.inv(a); }                  // a^{-1}
  Elem circ_inv(Elem a) const { return circ_.inv(a); }            // a^{(-1 under o)}

  const Perm& gamma(Elem x) const { return gamma_.maps[static_cast<size_t>(x)]; }
  const GammaFunction& gamma_function() const { return gamma_; }

  const CayleyTable& add_table() const { return add_.table(); }
  const CayleyTable& circ_table() const { return circ_.table(); }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) {
    return a.add_table() == b.add_table() && a.circ_table() == b.circ_table();
  }

 private:
  SkewBrace(CayleyTable add, CayleyTable circ)
      : add_(validate_side(std::move(add), Errc::add_not_group)),
        circ_(validate_side(std::move(circ), Errc::circ_not_group)) {
    if (add_.order() != circ_.order())
      fail(Errc::identity_mismatch, "tables have different orders");
    if (add_.identity() != circ_.identity())
      fail(Errc::identity_mismatch, "additive identity " + std::to_string(add_.identity()) +
                                        " differs from multiplicative identity " + std::to_string(circ_.identity()));
    if (add_.identity() != 0)
      fail(Errc::identity_mismatch,
           "shared identity sits at index " + std::to_string(add_.identity()) + ", expected 0");
    extract_gamma();
  }

  static FiniteGroup validate_side(CayleyTable t, Errc code) {
    try {
      return FiniteGroup(std::move(t));
    } catch (const Error& e) {
      fail(code, e.what());
    }
  }

  void extract_gamma() {
    const int n = order();
    gamma_.maps.reserve(static_cast<size_t>(n));
    for (Elem x = 0; x < n; ++x) {
      std::vector<Elem> img(static_cast<size_t>(n));
      for (Elem y = 0; y < n; ++y) img[static_cast<size_t>(y)] = add_.mul(circ_.mul(y, x), add_.inv(x));
      // Bijective by the Latin square property; the brace axiom is exactly
      // that this map is additive.
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (img[static_cast<size_t>(add_.mul(y, z))] !=
              add_.mul(img[static_cast<size_t>(y)], img[static_cast<size_t>(z)]))
            fail(Errc::gamma_not_endomorphism,
                 "gamma(" + std::to_string(x) + ") breaks additivity at (y,z) = (" + std::to_string(y) + "," +
                     std::to_string(z) + ")");
      gamma_.maps.emplace_back(std::move(img));
    }
  }

  FiniteGroup add_;
  FiniteGroup circ_;
  GammaFunction gamma_;
};

inline SkewBrace validate_brace(CayleyTable add, CayleyTable circ) {
  return SkewBrace::validate(std::move(add), std::move(circ));
}

inline const Perm& gamma_of(const SkewBrace& b, Elem x) { return b.gamma(x); }

// Rebuild the brace whose multiplication is y o x = gamma(x)(y) * x.
// The input maps must be automorphisms satisfying the functional equation.
inline SkewBrace circ_from_gamma(const FiniteGroup& g, const GammaFunction& gamma) {
  const int n = g.order();
  if (static_cast<int>(gamma.maps.size()) != n)
    fail(Errc::not_automorphism, "gamma has " + std::to_string(gamma.maps.size()) + " maps for order " + std::to_string(n));
  GfeResult gfe = check_gfe(g, gamma);
  if (!gfe.ok)
    fail(Errc::gfe_violation,
         "functional equation fails at (x,y) = (" + std::to_string(gfe.x) + "," + std::to_string(gfe.y) + ")");
  for (Elem x = 0; x < n; ++x) {
    const Perm& p = gamma.maps[static_cast<size_t>(x)];
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (p(g.mul(y, z)) != g.mul(p(y), p(z)))
          fail(Errc::not_automorphism, "gamma(" + std::to_string(x) + ") is not an automorphism");
  }
  CayleyTable circ(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
  for (Elem y = 0; y < n; ++y)
    for (Elem x = 0; x < n; ++x) circ.at(y, x) = g.mul(gamma.maps[static_cast<size_t>(x)](y), x);
  SkewBrace b = SkewBrace::validate(g.table(), std::move(circ));
  if (!(b.gamma_function() == gamma))
    fail(Errc::gfe_violation, "reconstructed brace does not reproduce its gamma");  // internal
  return b;
}

// Import a LEFT skew brace (B, +, o) by taking the opposite of both
// operations: x . y := y + x and x o' y := y o x.  The left-brace law is
// validated first and the result is re-validated as a right brace.
inline SkewBrace from_left_convention(const CayleyTable& plus, const CayleyTable& circ) {
  const int n = plus.n;
  if (circ.n != n) fail(Errc::left_axiom_violated, "tables have different orders");
  FiniteGroup p = [&] {
    try {
      return FiniteGroup(plus);
    } catch (const Error& e) {
      fail(Errc::left_axiom_violated, std::string("additive table: ") + e.what());
    }
  }();
  FiniteGroup c = [&] {
    try {
      return FiniteGroup(circ);
    } catch (const Error& e) {
      fail(Errc::left_axiom_violated, std::string("multiplicative table: ") + e.what());
    }
  }();
  if (p.identity() != c.identity())
    fail(Errc::left_axiom_violated, "identities of + and o differ");
  // Eq. lsb: the maps y -> -x + (x o y) must be additive.
  for (Elem x = 0; x < n; ++x) {
    auto lambda = [&](Elem y) { return p.mul(p.inv(x), c.mul(x, y)); };
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (lambda(p.mul(y, z)) != p.mul(lambda(y), lambda(z)))
          fail(Errc::left_axiom_violated, "left-brace law fails at (x,y,z) = (" + std::to_string(x) + "," +
                                              std::to_string(y) + "," + std::to_string(z) + ")");
  }
  CayleyTable add_op(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
  CayleyTable circ_op(n, std::vector<Elem>(static_cast<size_t>(n) * static_cast<size_t>(n)));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      add_op.at(i, j) = plus.at(j, i);
      circ_op.at(i, j) = circ.at(j, i);
    }
  try {
    return SkewBrace::validate(std::move(add_op), std::move(circ_op));
  } catch (const Error& e) {
    fail(Errc::conversion_sanity_failed, std::string("double-opposite is not a right brace: ") + e.what());
  }
}

}  // namespace skewbrace
