#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regsg/biorder.hpp"
#include "regsg/category.hpp"
#include "regsg/cross_connection.hpp"
#include "regsg/inductive_groupoid.hpp"
#include "regsg/report.hpp"
#include "regsg/semigroup_cxn.hpp"

namespace regsg {

  // E/L under omega^l (or E/R under omega^r). Classes are numbered in the
  // order of their least idempotents, which also serve as representatives.
  struct ClassPoset {
    std::vector<std::string> labels;
    std::vector<Element>     reps;
    std::vector<bool>        order;  // order[a * size() + b] iff a <= b

    std::size_t size() const noexcept {
      return reps.size();
    }
    bool leq(std::uint32_t a, std::uint32_t b) const {
      return order[a * size() + b];
    }
  };

  ClassPoset l_class_poset(BiorderedSet const& E);
  ClassPoset r_class_poset(BiorderedSet const& E);

  // A self-map given by the image of each point.
  using PosetMap = std::vector<std::uint32_t>;

  // An idempotent normal mapping with image the principal ideal of a.
  std::optional<PosetMap> normal_retraction(ClassPoset const& P, std::uint32_t a);
  bool                    is_normal_mapping(ClassPoset const& P, PosetMap const& alpha);
  // Every element is the apex of a normal retraction.
  Report is_regular_poset(ClassPoset const& P, std::string const& suite = "poset");

  enum class ArrowTag { Inclusion, Retraction, Groupoid };

  std::string_view to_string(ArrowTag tag) noexcept;

  // An arrow of the quiver on E/L (or E/R) as a triple r(e, u, f) (l(e, u, f))
  // of idempotents e, f and a carrier u, between the classes of e and f.
  struct TaggedMorphism {
    ObjectId dom;
    Element  e;
    Element  carrier;
    Element  f;
    ObjectId cod;
    ArrowTag tag;

    auto operator<=>(TaggedMorphism const&) const = default;
  };

  struct Quiver {
    std::vector<std::string>    objects;
    std::vector<TaggedMorphism> arrows;
  };

  // A composable sequence of arrows; empty for an identity.
  struct Path {
    ObjectId                 dom;
    ObjectId                 cod;
    std::vector<std::size_t> arrows;

    auto operator<=>(Path const&) const = default;
  };

  // Identities and all composable sequences of at most max_length arrows.
  std::vector<Path> free_category_paths(Quiver const& Q, std::size_t max_length);

  // The category L_G (or R_G) of ~-classes of triples. Morphisms are stored
  // as (a, u, b) with u = e u for the representative e of a (u = u e on the
  // right).
  struct GroupoidCategory {
    bool                  left = true;
    ClassPoset            poset;
    Quiver                quiver;
    FiniteCategory        category;
    std::vector<ObjectId> class_of;  // per vertex of the biordered set

    // The morphism a raw triple belongs to. Throws BadIndex if the carrier
    // lies outside eSf (fSe on the right).
    MorphismId triple(FiniteSemigroup const& S, BiorderedSet const& E, Element e, Element u, Element f) const;
    // Composite of the arrows of a path. Throws NotComposable.
    MorphismId collapse(FiniteSemigroup const& S, BiorderedSet const& E, Path const& p) const;
  };

  // P, Q and G arrows: inclusions from omega^l, retractions from the
  // structure mappings and isomorphisms from the morphisms of G(S); dually
  // from omega^r and the reversed morphisms.
  Quiver build_quiver_L(InductiveGroupoid const& G);
  Quiver build_quiver_R(InductiveGroupoid const& G);

  // Closes the collapsed arrows of the quiver under composition.
  GroupoidCategory build_LG(InductiveGroupoid const& G);
  GroupoidCategory build_RG(InductiveGroupoid const& G);

  // L_G, R_G and the cross-connection between them.
  struct GroupoidCxn {
    InductiveGroupoid const* G = nullptr;  // must outlive this
    GroupoidCategory         left;
    GroupoidCategory         right;
    CrossConnection          X;

    FiniteCategory const& LG() const noexcept {
      return X.C();
    }
    FiniteCategory const& RG() const noexcept {
      return X.D();
    }
    MorphismId r(Element e, Element u, Element f) const;
    MorphismId l(Element e, Element u, Element f) const;
    LinkedObjects linked_pair(Element e) const;
  };

  // r^x(<-g) = r(g, gx, f) with apex the class of f in E(L_x), and dually
  // l^x(->g) = l(g, xg, f) with f in E(R_x).
  NormalCone cone_rx(GroupoidCategory const& L, InductiveGroupoid const& G, Element x);
  NormalCone cone_lx(GroupoidCategory const& R, InductiveGroupoid const& G, Element x);

  // Recomputes every component of r^x (l^x) through each sandwich element as
  // a composite of quiver arrows and compares.
  Report verify_cone_construction(GroupoidCategory const& C, InductiveGroupoid const& G, std::string const& suite);

  // ->e goes to H(r^e; -) and l(e, u, f) to r(f, u, e); dually <-e goes to
  // H(l^e; -) and r(e, u, f) to l(f, u, e).
  GroupoidCxn build_GammaG(InductiveGroupoid const& G);

  // Hom-set sizes, arrow classes, ~, decompositions, normal category axioms,
  // cone composition, the cross-connection and its linked pairs, biorder and
  // semigroup.
  Report verify_groupoid_cxn(GroupoidCxn const& X);

  // r(e, u, f) -> rho(e, u, f) and <-e -> Se; l(e, u, f) -> lambda(e, u, f)
  // and ->e -> eS.
  CategoryFunctor functor_frakL(GroupoidCxn const& X, SemigroupCxn const& S);
  CategoryFunctor functor_frakR(GroupoidCxn const& X, SemigroupCxn const& S);

  // Every raw triple is sent where the formula says.
  Report verify_frak_well_defined(GroupoidCxn const&     X,
                                  SemigroupCxn const&    S,
                                  CategoryFunctor const& frakL,
                                  CategoryFunctor const& frakR,
                                  std::string const&     suite = "cxn-from-ind");

  // Both functors are isomorphisms of normal categories, M1 holds at every
  // linked pair and object and M2 at every morphism between linked objects.
  Report verify_cxn_isomorphism(GroupoidCxn const&     X,
                                SemigroupCxn const&    S,
                                CategoryFunctor const& frakL,
                                CategoryFunctor const& frakR,
                                std::string const&     suite = "cxn-from-ind");

}  // namespace regsg
