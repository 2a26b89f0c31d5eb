#include <doctest.h>

#include <set>
#include <vector>

#include "helpers.hpp"
#include "regsg/corpus.hpp"
#include "regsg/semigroup_cxn.hpp"

using namespace regsg;
using namespace regsg::testing;

TEST_SUITE("cxn_semigroup") {
  TEST_CASE("principal cones multiply like the semigroup") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      SemigroupCxn const   X = build_GammaS(S);
      FiniteCategory const& L = X.LS();
      FiniteCategory const& R = X.RS();
      for (Element a = 0; a < S.order(); ++a) {
        NormalCone const ra = X.principal_cone_L(a);
        NormalCone const la = X.principal_cone_R(a);
        CHECK(is_normal_cone(L, ra));
        CHECK(is_normal_cone(R, la));
        for (Element b = 0; b < S.order(); ++b) {
          Element const ab = S.product(a, b);
          CHECK(cone_compose(L, ra, X.principal_cone_L(b)) == X.principal_cone_L(ab));
          CHECK(cone_compose(R, X.principal_cone_R(b), la) == X.principal_cone_R(ab));
        }
      }
    }
  }

  TEST_CASE("principal cone components") {
    FiniteSemigroup const S = corpus::t3();
    SemigroupCxn const    X = build_GammaS(S);
    for (Element a = 0; a < S.order(); ++a) {
      NormalCone const ra = X.principal_cone_L(a);
      for (ObjectId c = 0; c < X.LS().object_count(); ++c) {
        Element const e = X.left.reps[c];
        // The carrier of rho^a at Se is ea.
        CHECK(X.LS().morphism(ra(c)).carrier == S.product(e, a));
      }
    }
  }

  TEST_CASE("transposes swap rho and lambda") {
    for (auto const& name : {"B2", "I2", "T3"}) {
      FiniteSemigroup const S = corpus::by_name(name);
      SemigroupCxn const    X = build_GammaS(S);
      for (Element e : X.green.idempotents) {
        for (Element f : X.green.idempotents) {
          std::set<Element> eSf;
          for (Element s = 0; s < S.order(); ++s) {
            eSf.insert(S.product({e, s, f}));
          }
          for (Element u : eSf) {
            MorphismId const r = X.rho(e, u, f);
            CHECK(transpose(X.X, r, X.linked_pair(e), X.linked_pair(f)) == X.lambda(f, u, e));
          }
        }
      }
      CHECK(thrown_kind([&] { (void) X.rho(X.green.idempotents[0], S.order(), X.green.idempotents[0]); })
            == "BadIndex");
    }
  }

  TEST_CASE("S_Gamma is S") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      SemigroupCxn const        X  = build_GammaS(S);
      LinkedPairSemigroup const SG = build_S_Gamma(X);
      REQUIRE(SG.semigroup.order() == S.order());
      // a -> (rho^a, lambda^a) is itself the isomorphism.
      CHECK(is_isomorphism(S, SG.semigroup, SG.source));
      // The idempotent pairs are exactly those of idempotents.
      std::set<Element> idem_pairs;
      for (Element p = 0; p < SG.semigroup.order(); ++p) {
        if (SG.semigroup.is_idempotent(p)) {
          idem_pairs.insert(p);
        }
      }
      std::set<Element> expected;
      for (Element e : X.green.idempotents) {
        expected.insert(SG.source[e]);
      }
      CHECK(idem_pairs == expected);
      CHECK(X.X.linked().size() == X.green.idempotents.size());
    }
  }

  TEST_CASE("linked pairs carry the biordered set of S") {
    for (auto const& S : whole_corpus()) {
      SemigroupCxn const X = build_GammaS(S);
      BiorderedSet const E = biorder_of_EGamma(X);
      CHECK(biorder_isomorphic(E, X.biorder).has_value());
      for (Element e : X.green.idempotents) {
        CHECK(X.X.is_linked(X.linked_pair(e).first, X.linked_pair(e).second));
      }
    }
  }

  TEST_CASE("whole suite") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      Report const r = verify_semigroup_cxn(build_GammaS(S));
      for (auto const& rec : r.records()) {
        CAPTURE(rec.check);
        CAPTURE(rec.witness);
        CHECK(rec.status == Status::Pass);
      }
    }
  }
}
