#include <doctest.h>

#include <vector>

#include "faults.hpp"
#include "helpers.hpp"
#include "regsg/category.hpp"
#include "regsg/corpus.hpp"
#include "regsg/semigroup_cxn.hpp"

using namespace regsg;
using namespace regsg::testing;

namespace {

  std::size_t sandwich_count(FiniteSemigroup const& S, Element e, Element f) {
    std::vector<bool> seen(S.order());
    std::size_t       n = 0;
    for (Element s = 0; s < S.order(); ++s) {
      Element const u = S.product({e, s, f});
      if (!seen[u]) {
        seen[u] = true;
        ++n;
      }
    }
    return n;
  }

}  // namespace

TEST_SUITE("normal_category") {
  TEST_CASE("hom-sets of L_S and R_S have |eSf| and |fSe| elements") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      GreenData const         g = green(S);
      PrincipalCategory const L = build_LS(S, g);
      PrincipalCategory const R = build_RS(S, g);
      for (Element e : g.idempotents) {
        for (Element f : g.idempotents) {
          CHECK(L.category.hom(L.object_of[e], L.object_of[f]).size() == sandwich_count(S, e, f));
          CHECK(R.category.hom(R.object_of[e], R.object_of[f]).size() == sandwich_count(S, f, e));
        }
      }
      CHECK(L.category.object_count() == g.class_count(g.lclass));
      CHECK(R.category.object_count() == g.class_count(g.rclass));
    }
  }

  TEST_CASE("RB22 hom-sets are singletons") {
    // eSf = {ef} in a rectangular band.
    FiniteSemigroup const S = corpus::rb22();
    GreenData const       g = green(S);
    for (auto const& C : {build_LS(S, g).category, build_RS(S, g).category}) {
      CHECK(C.object_count() == 2);
      for (ObjectId a = 0; a < 2; ++a) {
        for (ObjectId b = 0; b < 2; ++b) {
          CHECK(C.hom(a, b).size() == 1);
          CHECK(C.is_iso(C.hom(a, b)[0]));
        }
      }
    }
  }

  TEST_CASE("L_S and R_S are normal categories") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      GreenData const g = green(S);
      CHECK(verify_normal_category(build_LS(S, g).category).ok());
      CHECK(verify_normal_category(build_RS(S, g).category).ok());
    }
  }

  TEST_CASE("normal factorizations compose back") {
    FiniteSemigroup const S = corpus::t3();
    FiniteCategory const  C = build_LS(S, green(S)).category;
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      Factorization const fac = normal_factorize(C, f);
      CHECK(C.compose({fac.retraction, fac.iso, fac.inclusion}) == f);
      CHECK(C.compose(fac.retraction, fac.iso) == fac.epi);
      CHECK(C.is_retraction(fac.retraction));
      CHECK(C.is_iso(fac.iso));
      CHECK(C.is_inclusion(fac.inclusion));
      MorphismClass const k = classify(C, f);
      CHECK(k.iso == C.is_iso(f));
      CHECK(k.epi == C.is_epi(f));
      CHECK(k.inclusion == C.is_inclusion(f));
      if (k.iso) {
        CHECK(C.compose(f, C.iso_inverse(f)) == C.identity(C.dom(f)));
      }
    }
  }

  TEST_CASE("ideals are full on the subobjects") {
    FiniteSemigroup const S = corpus::t3();
    FiniteCategory const  C = build_LS(S, green(S)).category;
    for (ObjectId c = 0; c < C.object_count(); ++c) {
      std::vector<ObjectId> objs;
      FiniteCategory const  I = ideal(C, c, &objs);
      REQUIRE(I.object_count() == objs.size());
      std::size_t below = 0;
      for (ObjectId d = 0; d < C.object_count(); ++d) {
        below += C.is_subobject(d, c) || d == c;
      }
      CHECK(objs.size() == below);
      for (ObjectId a = 0; a < objs.size(); ++a) {
        for (ObjectId b = 0; b < objs.size(); ++b) {
          CHECK(I.hom(a, b).size() == C.hom(objs[a], objs[b]).size());
        }
      }
    }
  }

  TEST_CASE("an inclusion without a retraction breaks NC2") {
    FiniteCategory const C = faults::unsplit_inclusion();
    REQUIRE(C.is_subobject(0, 1));
    Report const r = verify_normal_category(C);
    CHECK_FALSE(r.passed("NC2"));
    REQUIRE(r.find("NC2") != nullptr);
    CHECK(r.find("NC2")->witness.find("does not split") != std::string::npos);
  }

  TEST_CASE("cones with no isomorphic component are not normal") {
    FiniteSemigroup const   S = corpus::sl2();
    PrincipalCategory const L = build_LS(S, green(S));
    FiniteCategory const&   C = L.category;
    Element const           zero = S.product(0, 1);
    Element const           one  = zero == 0 ? 1 : 0;
    ObjectId const          bot  = L.object_of[zero];
    ObjectId const          top  = L.object_of[one];
    REQUIRE(C.is_subobject(bot, top));
    // Both components collapse onto the zero.
    MorphismId const crush = *C.find({top, zero, top});
    NormalCone       gamma{top, std::vector<MorphismId>(2)};
    gamma.components[top] = crush;
    gamma.components[bot] = C.compose(C.inclusion(bot, top), crush);
    Report const r        = verify_cone(C, gamma);
    CHECK(r.passed("Ncone1"));
    CHECK(r.passed("Ncone2"));
    CHECK_FALSE(r.passed("Ncone3"));
    CHECK_FALSE(r.find("Ncone3")->witness.empty());
    // The identity cone is fine.
    NormalCone id{top, {C.inclusion(bot, top), C.identity(top)}};
    if (bot != 0) {
      std::swap(id.components[0], id.components[1]);
    }
    CHECK(is_normal_cone(C, id));
    CHECK(is_idempotent_cone(C, id));
  }

  TEST_CASE("cone products and H-functors") {
    FiniteSemigroup const S     = corpus::t3();
    FiniteCategory const  C     = build_LS(S, green(S)).category;
    auto const            cones = enumerate_normal_cones(C);
    REQUIRE_FALSE(cones.empty());
    // TC is a semigroup: closed and associative.
    std::size_t const step = cones.size() / 12 + 1;
    for (std::size_t a = 0; a < cones.size(); a += step) {
      for (std::size_t b = 0; b < cones.size(); b += step) {
        NormalCone const ab = cone_compose(C, cones[a], cones[b]);
        CHECK(is_normal_cone(C, ab));
        for (std::size_t c = 0; c < cones.size(); c += step) {
          CHECK(cone_compose(C, ab, cones[c]) == cone_compose(C, cones[a], cone_compose(C, cones[b], cones[c])));
        }
      }
    }
    for (std::size_t a = 0; a < cones.size(); a += step) {
      if (!is_idempotent_cone(C, cones[a])) {
        continue;
      }
      HFunctor const h = h_functor(C, cones[a]);
      CHECK(is_subfunctor(h, h));
      CHECK(m_set_of_cone(C, cones[a]).size() >= 1);
    }
  }

  TEST_CASE("functors must preserve identities") {
    FiniteSemigroup const S = corpus::sl2();
    FiniteCategory const  C = build_LS(S, green(S)).category;
    CategoryFunctor       F{{0, 1}, {}};
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      F.morphisms.push_back(f);
    }
    CHECK_NOTHROW(check_functor(F, C, C));
    CHECK(isomorphism_check(F, C, C).ok());
    // Send every morphism to the first one.
    CategoryFunctor G{{0, 1}, std::vector<MorphismId>(C.morphism_count(), 0)};
    CHECK(thrown_kind([&] { check_functor(G, C, C); }) == "NotAFunctor");
  }
}
