#pragma once

// Deliberately broken structures. Each function returns the report of the
// checker that should catch the fault.

#include <utility>
#include <vector>

#include "regsg/category.hpp"
#include "regsg/corpus.hpp"
#include "regsg/cxn_from_ind.hpp"
#include "regsg/inductive_groupoid.hpp"

namespace regsg::faults {

  // T3's groupoid with one pair u < x of a non-identity x removed from the
  // order, so x loses a restriction.
  inline Report og3_dropped_order_pair() {
    InductiveGroupoid const IG(corpus::t3());
    OrderedGroupoid         G = IG.groupoid();
    std::size_t const       n = G.size();
    for (MorphismId x = 0; x < n; ++x) {
      if (x == G.identity[G.dom[x]]) {
        continue;
      }
      for (MorphismId u = 0; u < n; ++u) {
        if (u != x && G.leq(u, x)) {
          G.order[u * n + x] = false;
          return verify_ordered_axioms(G);
        }
      }
    }
    return {};
  }

  // T3's groupoid with the trivial chain at the corner of a singular square
  // evaluated to a non-identity loop. Every other chain is left alone.
  inline Report ig2_perturbed_identity_chain() {
    InductiveGroupoid const IG(corpus::t3());
    OrderedGroupoid         G = IG.groupoid();
    Vertex                  target = BiorderedSet::kUndefined;
    MorphismId              loop   = kNone;
    for (auto const& sq : singular_squares(G.objects)) {
      for (MorphismId m = 0; m < G.size() && loop == kNone; ++m) {
        if (G.dom[m] == sq.e && G.cod[m] == sq.e && m != G.identity[sq.e]) {
          target = sq.e;
          loop   = m;
        }
      }
    }
    if (loop == kNone) {
      return {};
    }
    auto const original = G.evaluate;
    G.evaluate          = [=](EChain const& c) {
      return c.length() == 1 && c.dom() == target ? loop : original(c);
    };
    return verify_inductive_axioms(G, 4);
  }

  // a -> b as an inclusion and nothing going back.
  inline FiniteCategory unsplit_inclusion() {
    std::vector<CatMorphism> ms{{0, 0, 0}, {1, 0, 1}, {0, 1, 1}};
    auto compose = [](CatMorphism const& f, CatMorphism const& g) -> Element { return f.carrier + g.carrier; };
    return FiniteCategory({"a", "b"}, ms, compose, {{0, 1, 1}});
  }

  inline Report nc2_unsplit_inclusion() {
    return verify_normal_category(unsplit_inclusion());
  }

  // frakR on I2 with the images of the two automorphisms of one object
  // exchanged.
  inline Report m2_swapped_frakR() {
    FiniteSemigroup const   S = corpus::i2();
    InductiveGroupoid const IG(S);
    SemigroupCxn const      SC = build_GammaS(S);
    GroupoidCxn const       X  = build_GammaG(IG);
    CategoryFunctor const   FL = functor_frakL(X, SC);
    CategoryFunctor         FR = functor_frakR(X, SC);
    for (ObjectId d = 0; d < X.RG().object_count(); ++d) {
      std::vector<MorphismId> isos;
      for (MorphismId m : X.RG().hom(d, d)) {
        if (X.RG().is_iso(m)) {
          isos.push_back(m);
        }
      }
      if (isos.size() >= 2) {
        std::swap(FR.morphisms[isos[0]], FR.morphisms[isos[1]]);
        return verify_cxn_isomorphism(X, SC, FL, FR);
      }
    }
    return {};
  }

}  // namespace regsg::faults
