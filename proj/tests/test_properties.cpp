#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace skewbrace;
using testutil::c4v4_brace;
using testutil::trivial_brace;

TEST_CASE("trivial braces satisfy all three predicates", "[properties]") {
  for (int order = 1; order <= 8; ++order)
    for (const auto& ng : group_catalog(order)) {
      SkewBrace b = trivial_brace(ng.group);
      PredicateTriple p = predicates(b);
      REQUIRE(p.biskew);
      REQUIRE(p.lambda_homomorphic);
      REQUIRE(p.inner);
    }
}

TEST_CASE("C4/V4 predicate triple", "[properties]") {
  SkewBrace b = c4v4_brace();
  REQUIRE(is_biskew_direct(b));
  REQUIRE(is_biskew_gamma(b));
  REQUIRE(is_lambda_homomorphic(b));
  REQUIRE_FALSE(is_inner(b).inner);
}

TEST_CASE("inner witnesses", "[properties]") {
  SECTION("trivial braces use t = 0") {
    InnerResult r = is_inner(trivial_brace(symmetric3_group()));
    REQUIRE(r.inner);
    REQUIRE(r.witnesses == std::vector<Elem>(6, 0));
  }
  SECTION("witnesses actually realize gamma as conjugation, minimally") {
    for (const SkewBrace& b : testutil::census_through(6)) {
      InnerResult r = is_inner(b);
      if (!r.inner) continue;
      for (Elem y = 0; y < b.order(); ++y) {
        Elem t = r.witnesses[static_cast<size_t>(y)];
        for (Elem x = 0; x < b.order(); ++x) REQUIRE(b.gamma(y)(x) == b.additive().conj(x, t));
        for (Elem s = 0; s < t; ++s) {
          bool matches = true;
          for (Elem x = 0; x < b.order() && matches; ++x) matches = b.gamma(y)(x) == b.additive().conj(x, s);
          REQUIRE_FALSE(matches);
        }
      }
    }
  }
}

TEST_CASE("the two bi-skew procedures agree on every census brace", "[properties]") {
  for (const SkewBrace& b : testutil::census_through(8)) REQUIRE(is_biskew_direct(b) == is_biskew_gamma(b));
}

TEST_CASE("anti-homomorphism is equivalent to its commutator form", "[properties]") {
  for (const SkewBrace& b : testutil::census_through(6)) {
    bool commutator_form = true;
    for (Elem x = 0; x < b.order() && commutator_form; ++x)
      for (Elem y = 0; y < b.order() && commutator_form; ++y)
        for (Elem z = 0; z < b.order() && commutator_form; ++z) {
          Perm composite = compose(b.gamma(z), b.gamma(y));
          commutator_form = gamma_commutator(b, x, b.mul(y, z)) == b.mul(b.inv(x), composite(x));
        }
    REQUIRE(commutator_form == is_biskew_gamma(b));
  }
}

TEST_CASE("homomorphic and anti-homomorphic gamma images commute pointwise", "[properties]") {
  int both = 0;
  for (const SkewBrace& b : testutil::census_through(8)) {
    if (!is_biskew_gamma(b) || !is_lambda_homomorphic(b)) continue;
    ++both;
    for (Elem y = 0; y < b.order(); ++y)
      for (Elem z = 0; z < b.order(); ++z)
        REQUIRE(compose(b.gamma(y), b.gamma(z)) == compose(b.gamma(z), b.gamma(y)));
  }
  REQUIRE(both > 0);
}

TEST_CASE("a bi-skew brace that is not lambda-homomorphic exists by order 8", "[properties]") {
  // gamma anti-homomorphic with a non-abelian image cannot be homomorphic
  bool found = false;
  for (const SkewBrace& b : testutil::census_through(8))
    if (is_biskew_gamma(b) && !is_lambda_homomorphic(b)) found = true;
  REQUIRE(found);
}

TEST_CASE("inner is invariant under brace isomorphism", "[properties]") {
  std::vector<Perm> shuffles{Perm({0, 2, 1, 3}), Perm({0, 3, 1, 2})};
  for (int order : {4}) {
    for (const SkewBrace& b : census(order)) {
      for (const Perm& sigma : shuffles) {
        SkewBrace moved = testutil::relabeled_brace(b, sigma);
        REQUIRE(is_inner(moved).inner == is_inner(b).inner);
        REQUIRE(predicates(moved) == predicates(b));
      }
    }
  }
  // and on order 6 with a fixed 6-point shuffle
  Perm sigma6({0, 4, 2, 5, 1, 3});
  for (const SkewBrace& b : census(6)) {
    SkewBrace moved = testutil::relabeled_brace(b, sigma6);
    REQUIRE(predicates(moved) == predicates(b));
  }
}
