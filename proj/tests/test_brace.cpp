#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace skewbrace;
using testutil::c4v4_brace;
using testutil::opposite_table;
using testutil::relabeled_table;
using testutil::trivial_brace;

TEST_CASE("trivial brace has identity gamma", "[brace]") {
  for (int order = 1; order <= 8; ++order)
    for (const auto& ng : group_catalog(order)) {
      SkewBrace b = trivial_brace(ng.group);
      for (Elem x = 0; x < b.order(); ++x) REQUIRE(b.gamma(x).is_identity());
    }
}

TEST_CASE("the C4/V4 brace", "[brace]") {
  SkewBrace b = c4v4_brace();
  SECTION("multiplicative group is Klein four") {
    for (Elem x = 0; x < 4; ++x) REQUIRE(b.multiplicative().element_order(x) <= 2);
    REQUIRE_FALSE(isomorphisms(b.multiplicative(), klein_four_group()).empty());
  }
  SECTION("gamma is inversion exactly on odd elements") {
    Perm inversion({0, 3, 2, 1});
    for (Elem x = 0; x < 4; ++x) REQUIRE(b.gamma(x) == (x % 2 ? inversion : Perm::identity(4)));
    REQUIRE(gamma_of(b, 1) == inversion);
  }
  SECTION("gamma(x)(y) . x = y o x") {
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y) REQUIRE(b.mul(b.gamma(x)(y), x) == b.circ(y, x));
  }
}

TEST_CASE("gamma at the identity is trivial on every census brace", "[brace]") {
  for (const SkewBrace& b : testutil::census_through(6)) {
    REQUIRE(b.gamma(0).is_identity());
    for (Elem x = 0; x < b.order(); ++x)
      for (Elem y = 0; y < b.order(); ++y) REQUIRE(b.mul(b.gamma(x)(y), x) == b.circ(y, x));
  }
}

TEST_CASE("validation failures", "[brace]") {
  FiniteGroup c4 = cyclic_group(4);
  SECTION("additive table must be a group") {
    CayleyTable bad(4, std::vector<Elem>(16, 0));
    REQUIRE_THROWS_MATCHES(SkewBrace::validate(bad, c4.table()), Error,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("AddNotGroup")));
  }
  SECTION("multiplicative table must be a group") {
    CayleyTable bad(4, std::vector<Elem>(16, 0));
    REQUIRE_THROWS_MATCHES(SkewBrace::validate(c4.table(), bad), Error,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("CircNotGroup")));
  }
  SECTION("identities must coincide at 0") {
    Perm sigma({1, 0, 2, 3});
    CayleyTable moved = relabeled_table(c4.table(), sigma);  // identity now at 1
    REQUIRE_THROWS_MATCHES(SkewBrace::validate(c4.table(), moved), Error,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("IdentityMismatch")));
    REQUIRE_THROWS_MATCHES(SkewBrace::validate(moved, moved), Error,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("IdentityMismatch")));
  }
  SECTION("a shared-identity pair that breaks the brace axiom") {
    // Search relabelings of the C4 table that keep 0 as identity; the
    // test-side oracle decides which maps y -> (y o x) x^{-1} fail to be
    // additive, and the validator must agree and name GammaNotEndomorphism.
    bool found = false;
    std::vector<Elem> img{0, 1, 2, 3};
    while (std::next_permutation(img.begin() + 1, img.end())) {
      Perm sigma(img);
      CayleyTable circ = relabeled_table(c4.table(), sigma);
      bool oracle_ok = true;
      for (Elem x = 0; x < 4 && oracle_ok; ++x) {
        std::vector<Elem> g(4);
        for (Elem y = 0; y < 4; ++y) g[static_cast<size_t>(y)] = c4.mul(circ.at(y, x), c4.inv(x));
        for (Elem y = 0; y < 4 && oracle_ok; ++y)
          for (Elem z = 0; z < 4 && oracle_ok; ++z)
            oracle_ok = g[static_cast<size_t>(c4.mul(y, z))] ==
                        c4.mul(g[static_cast<size_t>(y)], g[static_cast<size_t>(z)]);
      }
      if (oracle_ok) {
        REQUIRE_NOTHROW(SkewBrace::validate(c4.table(), circ));
      } else {
        found = true;
        REQUIRE_THROWS_MATCHES(
            SkewBrace::validate(c4.table(), circ), Error,
            Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("GammaNotEndomorphism")));
      }
    }
    REQUIRE(found);
  }
}

TEST_CASE("check_gfe", "[brace]") {
  SECTION("identity maps always satisfy the equation") {
    FiniteGroup s3 = symmetric3_group();
    GammaFunction gamma{std::vector<Perm>(6, Perm::identity(6))};
    REQUIRE(check_gfe(s3, gamma).ok);
  }
  SECTION("the C4 parity gamma satisfies the equation") {
    FiniteGroup c4 = cyclic_group(4);
    Perm inversion({0, 3, 2, 1});
    GammaFunction gamma{{Perm::identity(4), inversion, Perm::identity(4), inversion}};
    REQUIRE(check_gfe(c4, gamma).ok);
  }
  SECTION("constant inversion on C3 fails at (0,0)") {
    FiniteGroup c3 = cyclic_group(3);
    Perm inversion({0, 2, 1});
    GammaFunction gamma{{inversion, inversion, inversion}};
    GfeResult r = check_gfe(c3, gamma);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.x == 0);
    REQUIRE(r.y == 0);
  }
}

TEST_CASE("circ_from_gamma", "[brace]") {
  FiniteGroup c4 = cyclic_group(4);
  SECTION("identity gamma gives the trivial brace") {
    GammaFunction gamma{std::vector<Perm>(4, Perm::identity(4))};
    SkewBrace b = circ_from_gamma(c4, gamma);
    REQUIRE(b == trivial_brace(c4));
  }
  SECTION("parity gamma gives the C4/V4 brace") {
    Perm inversion({0, 3, 2, 1});
    GammaFunction gamma{{Perm::identity(4), inversion, Perm::identity(4), inversion}};
    REQUIRE(circ_from_gamma(c4, gamma) == c4v4_brace());
  }
  SECTION("round-trip over the census") {
    for (const SkewBrace& b : testutil::census_through(6))
      REQUIRE(circ_from_gamma(b.additive(), b.gamma_function()) == b);
  }
  SECTION("gfe violations are rejected") {
    Perm inversion({0, 3, 2, 1});
    GammaFunction bad{{inversion, inversion, inversion, inversion}};
    REQUIRE_THROWS_MATCHES(circ_from_gamma(c4, bad), Error,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("GfeViolation")));
  }
  SECTION("non-automorphisms are rejected") {
    // swap 0 and 2: a bijection fixing the equation trivially paired with
    // identity elsewhere is not additive
    Perm swap02({2, 1, 0, 3});
    GammaFunction bad{{swap02, swap02, swap02, swap02}};
    REQUIRE_THROWS_AS(circ_from_gamma(c4, bad), Error);
  }
}

TEST_CASE("validation agrees with the gamma route on perturbed inputs", "[brace]") {
  // Either both accept or both reject, with groups held fixed.
  FiniteGroup c4 = cyclic_group(4);
  std::vector<Elem> img{0, 1, 2, 3};
  do {
    Perm sigma(img);
    CayleyTable circ = relabeled_table(c4.table(), sigma);
    bool direct_ok = true;
    try {
      SkewBrace::validate(c4.table(), circ);
    } catch (const Error&) {
      direct_ok = false;
    }
    GammaFunction gamma;
    for (Elem x = 0; x < 4; ++x) {
      std::vector<Elem> g(4);
      for (Elem y = 0; y < 4; ++y) g[static_cast<size_t>(y)] = c4.mul(circ.at(y, x), c4.inv(x));
      gamma.maps.emplace_back(std::move(g));
    }
    bool gamma_ok = check_gfe(c4, gamma).ok;
    for (Elem x = 0; x < 4 && gamma_ok; ++x)
      for (Elem y = 0; y < 4 && gamma_ok; ++y)
        for (Elem z = 0; z < 4 && gamma_ok; ++z)
          gamma_ok = gamma.maps[static_cast<size_t>(x)](c4.mul(y, z)) ==
                     c4.mul(gamma.maps[static_cast<size_t>(x)](y), gamma.maps[static_cast<size_t>(x)](z));
    REQUIRE(direct_ok == gamma_ok);
  } while (std::next_permutation(img.begin() + 1, img.end()));
}

TEST_CASE("left-convention import", "[brace]") {
  SECTION("left-trivial becomes right-trivial") {
    FiniteGroup s3 = symmetric3_group();
    SkewBrace b = from_left_convention(s3.table(), s3.table());
    REQUIRE(b.add_table() == opposite_table(s3.table()));
    for (Elem x = 0; x < 6; ++x) REQUIRE(b.gamma(x).is_identity());
  }
  SECTION("abelian additive group keeps its table") {
    FiniteGroup c4 = cyclic_group(4);
    SkewBrace b = from_left_convention(c4.table(), c4.table());
    REQUIRE(b.add_table() == c4.table());
  }
  SECTION("reversing both tables of the C4/V4 brace is a left brace mapping back") {
    SkewBrace b = c4v4_brace();
    SkewBrace back = from_left_convention(opposite_table(b.add_table()), opposite_table(b.circ_table()));
    REQUIRE(back == b);
  }
  SECTION("double-opposite is an involution across the census") {
    for (const SkewBrace& b : testutil::census_through(6)) {
      SkewBrace back = from_left_convention(opposite_table(b.add_table()), opposite_table(b.circ_table()));
      REQUIRE(back == b);
    }
  }
  SECTION("violations of the left law are named") {
    // the brace axiom pair rejected above also fails as a left brace
    FiniteGroup c4 = cyclic_group(4);
    bool found = false;
    std::vector<Elem> img{0, 1, 2, 3};
    while (std::next_permutation(img.begin() + 1, img.end())) {
      Perm sigma(img);
      CayleyTable circ = relabeled_table(c4.table(), sigma);
      try {
        from_left_convention(c4.table(), circ);
      } catch (const Error& e) {
        REQUIRE(e.code() == Errc::left_axiom_violated);
        found = true;
      }
    }
    REQUIRE(found);
  }
}
