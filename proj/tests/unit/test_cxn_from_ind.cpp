#include <doctest.h>

#include <algorithm>
#include <vector>

#include "faults.hpp"
#include "helpers.hpp"
#include "regsg/corpus.hpp"
#include "regsg/cxn_from_ind.hpp"

using namespace regsg;
using namespace regsg::testing;

namespace {

  TaggedMorphism arrow(ObjectId dom, ObjectId cod, Element tag) {
    return {dom, 0, tag, 0, cod, ArrowTag::Groupoid};
  }

  void require_all_pass(Report const& r) {
    for (auto const& rec : r.records()) {
      CAPTURE(rec.check);
      CAPTURE(rec.witness);
      CHECK(rec.status == Status::Pass);
    }
  }

}  // namespace

TEST_SUITE("cxn_from_ind") {
  TEST_CASE("paths of a small quiver") {
    // f, g : a -> b and h : b -> c.
    Quiver const Q{{"a", "b", "c"}, {arrow(0, 1, 0), arrow(0, 1, 1), arrow(1, 2, 2)}};
    auto         paths = free_category_paths(Q, 4);
    std::sort(paths.begin(), paths.end());
    CHECK(paths.size() == 8);
    CHECK(std::count_if(paths.begin(), paths.end(), [](Path const& p) { return p.arrows.empty(); }) == 3);
    CHECK(std::find(paths.begin(), paths.end(), Path{0, 2, {1, 2}}) != paths.end());
    CHECK(std::find(paths.begin(), paths.end(), Path{0, 2, {0, 2}}) != paths.end());

    Quiver const one{{"a", "b"}, {arrow(0, 1, 0)}};
    CHECK(free_category_paths(one, 4).size() == 3);
    // A loop has one path per length.
    Quiver const loop{{"a"}, {arrow(0, 0, 0)}};
    CHECK(free_category_paths(loop, 3).size() == 4);
  }

  TEST_CASE("class posets are regular") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      BiorderedSet const E = build_biorder(S);
      GreenData const    g = green(S);
      for (bool left : {true, false}) {
        ClassPoset const P = left ? l_class_poset(E) : r_class_poset(E);
        CHECK(P.size() == g.class_count(left ? g.lclass : g.rclass));
        CHECK(is_regular_poset(P).ok());
        for (std::uint32_t a = 0; a < P.size(); ++a) {
          auto const alpha = normal_retraction(P, a);
          REQUIRE(alpha.has_value());
          CHECK(is_normal_mapping(P, *alpha));
          for (std::uint32_t x = 0; x < P.size(); ++x) {
            CHECK((*alpha)[(*alpha)[x]] == (*alpha)[x]);
            CHECK(P.leq((*alpha)[x], a));
            if (P.leq(x, a)) {
              CHECK((*alpha)[x] == x);
            }
            for (std::uint32_t y = 0; y < P.size(); ++y) {
              if (P.leq(x, y)) {
                CHECK(P.leq((*alpha)[x], (*alpha)[y]));
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("L_G and R_G have the shape of L_S and R_S") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      InductiveGroupoid const IG(S);
      SemigroupCxn const      SC = build_GammaS(S);
      GroupoidCxn const       X  = build_GammaG(IG);
      CHECK(X.LG().object_count() == SC.LS().object_count());
      CHECK(X.LG().morphism_count() == SC.LS().morphism_count());
      CHECK(X.RG().object_count() == SC.RS().object_count());
      CHECK(X.RG().morphism_count() == SC.RS().morphism_count());
      CHECK(X.X.linked().size() == IG.biorder().size());
    }
    InductiveGroupoid const IG(corpus::t3());
    CHECK(build_quiver_L(IG).arrows.size() == 128);
    CHECK(build_LG(IG).category.morphism_count() == 162);
  }

  TEST_CASE("triples and paths collapse to the same morphism") {
    FiniteSemigroup const   S = corpus::t3();
    InductiveGroupoid const IG(S);
    BiorderedSet const&     E = IG.biorder();
    GroupoidCategory const  L = build_LG(IG);
    for (std::size_t i = 0; i < L.quiver.arrows.size(); ++i) {
      TaggedMorphism const& t = L.quiver.arrows[i];
      MorphismId const      m = L.triple(S, E, t.e, t.carrier, t.f);
      CHECK(L.category.dom(m) == t.dom);
      CHECK(L.category.cod(m) == t.cod);
      CHECK(L.collapse(S, E, Path{t.dom, t.cod, {i}}) == m);
    }
    auto const paths = free_category_paths(L.quiver, 2);
    for (auto const& p : paths) {
      if (p.arrows.size() != 2) {
        continue;
      }
      MorphismId const a = L.collapse(S, E, Path{p.dom, L.quiver.arrows[p.arrows[0]].cod, {p.arrows[0]}});
      MorphismId const b = L.collapse(S, E, Path{L.quiver.arrows[p.arrows[1]].dom, p.cod, {p.arrows[1]}});
      CHECK(L.collapse(S, E, p) == L.category.compose(a, b));
    }
    Element const e = E.element(0);
    CHECK(thrown_kind([&] { (void) L.triple(S, E, e, S.order(), e); }) == "BadIndex");
  }

  TEST_CASE("r^x and l^x land on the principal cones") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      InductiveGroupoid const IG(S);
      SemigroupCxn const      SC = build_GammaS(S);
      GroupoidCxn const       X  = build_GammaG(IG);
      CategoryFunctor const   FL = functor_frakL(X, SC);
      CategoryFunctor const   FR = functor_frakR(X, SC);
      for (Element x = 0; x < S.order(); ++x) {
        NormalCone const r  = cone_rx(X.left, IG, x);
        NormalCone const l  = cone_lx(X.right, IG, x);
        NormalCone const rs = SC.principal_cone_L(x);
        NormalCone const ls = SC.principal_cone_R(x);
        CHECK(FL.objects[r.apex] == rs.apex);
        CHECK(FR.objects[l.apex] == ls.apex);
        for (ObjectId c = 0; c < X.LG().object_count(); ++c) {
          CHECK(FL.morphisms[r(c)] == rs(FL.objects[c]));
        }
        for (ObjectId d = 0; d < X.RG().object_count(); ++d) {
          CHECK(FR.morphisms[l(d)] == ls(FR.objects[d]));
        }
      }
    }
  }

  TEST_CASE("whole construction verifies") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      InductiveGroupoid const IG(S);
      SemigroupCxn const      SC = build_GammaS(S);
      GroupoidCxn const       X  = build_GammaG(IG);
      CategoryFunctor const   FL = functor_frakL(X, SC);
      CategoryFunctor const   FR = functor_frakR(X, SC);
      require_all_pass(verify_groupoid_cxn(X));
      require_all_pass(verify_frak_well_defined(X, SC, FL, FR));
      require_all_pass(verify_cxn_isomorphism(X, SC, FL, FR));
    }
  }

  TEST_CASE("a scrambled frakL is caught") {
    FiniteSemigroup const   S = corpus::i2();
    InductiveGroupoid const IG(S);
    SemigroupCxn const      SC = build_GammaS(S);
    GroupoidCxn const       X  = build_GammaG(IG);
    CategoryFunctor         FL = functor_frakL(X, SC);
    CategoryFunctor const   FR = functor_frakR(X, SC);
    bool                    swapped = false;
    for (ObjectId a = 0; a < X.LG().object_count() && !swapped; ++a) {
      for (ObjectId b = 0; b < X.LG().object_count() && !swapped; ++b) {
        auto const& hom = X.LG().hom(a, b);
        if (hom.size() >= 2) {
          std::swap(FL.morphisms[hom[0]], FL.morphisms[hom[1]]);
          swapped = true;
        }
      }
    }
    REQUIRE(swapped);
    Report const r = verify_frak_well_defined(X, SC, FL, FR);
    CHECK_FALSE(r.passed("frakL-well-defined"));
    CHECK_FALSE(r.find("frakL-well-defined")->witness.empty());
    CHECK(r.passed("frakR-well-defined"));
  }

  TEST_CASE("swapped parallel morphisms in frakR break M2") {
    Report const r = faults::m2_swapped_frakR();
    REQUIRE(r.find("M2") != nullptr);
    CHECK_FALSE(r.passed("M2"));
    CHECK(r.find("M2")->witness.find("transpose of") != std::string::npos);
  }
}
