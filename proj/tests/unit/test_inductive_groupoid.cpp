#include <doctest.h>

#include <map>
#include <vector>

#include "faults.hpp"
#include "helpers.hpp"
#include "regsg/corpus.hpp"
#include "regsg/inductive_groupoid.hpp"

using namespace regsg;
using namespace regsg::testing;

TEST_SUITE("inductive_groupoid") {
  TEST_CASE("morphisms are element and inverse pairs") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      InductiveGroupoid const IG(S);
      std::size_t             pairs = 0;
      for (Element x = 0; x < S.order(); ++x) {
        for (Element y = 0; y < S.order(); ++y) {
          if (S.product({x, y, x}) == x && S.product({y, x, y}) == y) {
            ++pairs;
            REQUIRE(IG.find({x, y}).has_value());
          }
        }
      }
      CHECK(IG.morphisms().size() == pairs);
      OrderedGroupoid const& G = IG.groupoid();
      for (MorphismId m = 0; m < G.size(); ++m) {
        IGMorphism const x = IG.at(m);
        CHECK(G.objects.element(G.dom[m]) == IG.domain(x));
        CHECK(G.objects.element(G.cod[m]) == IG.codomain(x));
        CHECK(IG.at(G.inverse[m]) == IGMorphism{x.x_prime, x.x});
      }
    }
  }

  TEST_CASE("G(S) sizes") {
    std::map<std::string, std::size_t> const expected{{"SL2", 2}, {"RB22", 16}, {"B2", 5},
                                                      {"T2", 6},  {"I2", 7},    {"T3", 87}};
    for (auto const& S : whole_corpus()) {
      CHECK(InductiveGroupoid(S).morphisms().size() == expected.at(S.name()));
    }
  }

  TEST_CASE("restriction and corestriction formulas") {
    for (auto const& name : {"B2", "I2", "T3"}) {
      FiniteSemigroup const   S = corpus::by_name(name);
      InductiveGroupoid const IG(S);
      BiorderedSet const&     E = IG.biorder();
      for (auto const& m : IG.morphisms()) {
        for (Vertex v = 0; v < E.size(); ++v) {
          Element const e = E.element(v);
          if (E.omega(v, *E.vertex_of(IG.domain(m)))) {
            IGMorphism const u = IG.restrict(e, m);
            CHECK(u == IGMorphism{S.product(e, m.x), S.product(m.x_prime, e)});
            CHECK(IG.leq(u, m));
            CHECK(IG.domain(u) == e);
          } else {
            CHECK(thrown_kind([&] { (void) IG.restrict(e, m); }) == "NotBelow");
          }
          if (E.omega(v, *E.vertex_of(IG.codomain(m)))) {
            IGMorphism const u = IG.corestrict(m, e);
            CHECK(u == IGMorphism{S.product(m.x, e), S.product(e, m.x_prime)});
            CHECK(IG.codomain(u) == e);
          }
        }
      }
    }
  }

  TEST_CASE("evaluation multiplies the chain out") {
    FiniteSemigroup const   S = corpus::rb22();
    InductiveGroupoid const IG(S);
    BiorderedSet const&     E = IG.biorder();
    std::vector<Vertex>     p;
    for (auto l : {"(0,0)", "(0,1)", "(1,1)"}) {
      p.push_back(*E.vertex_of(by_label(S, l)));
    }
    IGMorphism const m = IG.evaluate(canonicalize(E, p));
    CHECK(m == IGMorphism{by_label(S, "(0,1)"), by_label(S, "(1,0)")});
    CHECK(IG.groupoid().evaluate_path(p) == *IG.find(m));
  }

  TEST_CASE("axioms hold on the corpus") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      InductiveGroupoid const IG(S);
      Report const            ord = verify_ordered_axioms(IG.groupoid());
      Report const            ind = verify_inductive_axioms(IG.groupoid(), 4);
      for (auto id : {"OG1", "OG2", "OG3", "OG3*"}) {
        CHECK(ord.passed(id));
      }
      for (auto id : {"IG1", "IG1*", "IG2"}) {
        CHECK(ind.passed(id));
      }
      CHECK(ord.ok());
      CHECK(ind.ok());
    }
  }

  TEST_CASE("p-classes rebuild the semigroup") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      InductiveGroupoid const IG(S);
      PClasses const          P = p_classes(IG.groupoid());
      CHECK(P.report.ok());
      // One class per element: (x, x') p (y, y') iff x = y.
      CHECK(P.representatives.size() == S.order());
      for (MorphismId a = 0; a < IG.morphisms().size(); ++a) {
        for (MorphismId b = 0; b < IG.morphisms().size(); ++b) {
          CHECK((P.class_of[a] == P.class_of[b]) == (IG.at(a).x == IG.at(b).x));
        }
      }
      CHECK(verify_pseudo_product(IG.groupoid(), P).ok());
      FiniteSemigroup const T = reconstruct_semigroup(IG.groupoid(), P, IG.class_labels(P));
      auto const            f = find_isomorphism(S, T);
      REQUIRE(f.has_value());
      // The labels carry the element, so the isomorphism found respects them.
      for (Element a = 0; a < S.order(); ++a) {
        CHECK(T.label((*f)[a]) == S.label(a));
      }
    }
  }

  TEST_CASE("a dropped order pair breaks OG3") {
    Report const r = faults::og3_dropped_order_pair();
    REQUIRE(r.find("OG3") != nullptr);
    CHECK_FALSE(r.passed("OG3"));
    CHECK(r.find("OG3")->witness.find("0 candidates") != std::string::npos);
  }

  TEST_CASE("a perturbed identity evaluation breaks IG2") {
    Report const r = faults::ig2_perturbed_identity_chain();
    REQUIRE(r.find("IG2") != nullptr);
    CHECK_FALSE(r.passed("IG2"));
    CHECK_FALSE(r.find("IG2")->witness.empty());
  }
}
