#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regsg/inductive_groupoid.hpp"
#include "regsg/report.hpp"
#include "regsg/semigroup.hpp"

namespace regsg {

  using ObjectId = std::uint32_t;

  // A morphism is a triple; the carrier is whatever the concrete category
  // uses to tell parallel morphisms apart (a semigroup element for the
  // categories built from semigroups, a formal tag otherwise).
  struct CatMorphism {
    ObjectId dom;
    Element  carrier;
    ObjectId cod;

    auto operator<=>(CatMorphism const&) const = default;
  };

  // f = q u j with q a retraction, u an isomorphism and j an inclusion.
  struct Factorization {
    MorphismId retraction;
    MorphismId iso;
    MorphismId inclusion;
    MorphismId epi;  // q u
    ObjectId   image;
  };

  // Finite category with a chosen family of inclusions. Composition is
  // written left to right: compose(f, g) is f followed by g.
  class FiniteCategory {
   public:
    using Composer = std::function<Element(CatMorphism const&, CatMorphism const&)>;

    FiniteCategory() = default;

    // Throws NotComposable if a composite is missing from the morphism list
    // and BadIndex if an object lacks an identity or an inclusion is unknown.
    FiniteCategory(std::vector<std::string> object_labels,
                   std::vector<CatMorphism> morphisms,
                   Composer const&          compose,
                   std::vector<CatMorphism> inclusions);

    std::size_t object_count() const noexcept {
      return labels_.size();
    }
    std::size_t morphism_count() const noexcept {
      return morphisms_.size();
    }
    std::string const& label(ObjectId a) const {
      return labels_.at(a);
    }
    CatMorphism const& morphism(MorphismId f) const {
      return morphisms_.at(f);
    }
    std::vector<CatMorphism> const& morphisms() const noexcept {
      return morphisms_;
    }
    std::optional<MorphismId> find(CatMorphism const& m) const;

    std::vector<MorphismId> const& hom(ObjectId a, ObjectId b) const {
      return hom_[a * object_count() + b];
    }
    std::vector<MorphismId> const& out(ObjectId a) const {
      return out_[a];
    }

    ObjectId dom(MorphismId f) const {
      return morphisms_[f].dom;
    }
    ObjectId cod(MorphismId f) const {
      return morphisms_[f].cod;
    }

    // Throws NotComposable.
    MorphismId compose(MorphismId f, MorphismId g) const;
    MorphismId compose(std::initializer_list<MorphismId> fs) const;

    MorphismId identity(ObjectId a) const {
      return identity_[a];
    }

    MorphismId inclusion(ObjectId a, ObjectId b) const {
      return inclusion_[a * object_count() + b];
    }
    bool is_subobject(ObjectId a, ObjectId b) const {
      return inclusion(a, b) != kNone;
    }
    bool is_inclusion(MorphismId f) const {
      return inclusion(dom(f), cod(f)) == f;
    }

    bool is_iso(MorphismId f) const {
      return iso_inverse_[f] != kNone;
    }
    MorphismId iso_inverse(MorphismId f) const {
      return iso_inverse_[f];
    }
    bool is_epi(MorphismId f) const {
      return epi_[f];
    }
    bool is_mono(MorphismId f) const {
      return mono_[f];
    }
    // f : c -> c' with j(c', c) f = 1.
    bool is_retraction(MorphismId f) const;

    // Normal factorization with the least image objects, if one exists.
    std::optional<Factorization> const& factorization(MorphismId f) const {
      return factorization_[f];
    }

    void set_carrier_labels(std::vector<std::string> labels) {
      carrier_labels_ = std::move(labels);
    }
    std::string to_string(MorphismId f) const;

   private:
    void classify();

    std::vector<std::string>              labels_;
    std::vector<CatMorphism>              morphisms_;
    std::map<CatMorphism, MorphismId>     index_;
    std::vector<std::vector<MorphismId>>  hom_;
    std::vector<std::vector<MorphismId>>  out_;
    std::vector<std::uint32_t>            out_pos_;
    std::vector<std::vector<MorphismId>>  compose_;
    std::vector<MorphismId>               identity_;
    std::vector<MorphismId>               inclusion_;
    std::vector<MorphismId>               iso_inverse_;
    std::vector<bool>                     epi_;
    std::vector<bool>                     mono_;
    std::vector<std::optional<Factorization>> factorization_;
    std::vector<std::string>              carrier_labels_;
  };

  struct MorphismClass {
    bool iso        = false;
    bool epi        = false;
    bool mono       = false;
    bool inclusion  = false;
    bool retraction = false;
  };

  MorphismClass classify(FiniteCategory const& C, MorphismId f);

  // Throws NoFactorization.
  Factorization normal_factorize(FiniteCategory const& C, MorphismId f);

  struct NormalCone {
    ObjectId                apex;
    std::vector<MorphismId> components;

    MorphismId operator()(ObjectId c) const {
      return components[c];
    }
    auto operator<=>(NormalCone const&) const = default;
  };

  Report verify_cone(FiniteCategory const& C, NormalCone const& gamma);
  bool   is_normal_cone(FiniteCategory const& C, NormalCone const& gamma);
  bool   is_idempotent_cone(FiniteCategory const& C, NormalCone const& gamma);

  // gamma * f for an epimorphism f out of the apex. Throws NotEpi.
  NormalCone cone_star(FiniteCategory const& C, NormalCone const& gamma, MorphismId f);
  // gamma . sigma = gamma * (sigma(apex gamma))°.
  NormalCone cone_compose(FiniteCategory const& C,
                          NormalCone const&     gamma,
                          NormalCone const&     sigma);

  // Objects at which the component is an isomorphism.
  std::vector<ObjectId> m_set_of_cone(FiniteCategory const& C, NormalCone const& gamma);

  // Every normal cone, by exhaustive search. Empty if the category has more
  // than max_objects objects.
  std::vector<NormalCone> enumerate_normal_cones(FiniteCategory const& C,
                                                 std::size_t           max_objects = 12);

  std::string to_string(FiniteCategory const& C, NormalCone const& gamma);

  // H(gamma; c) = { gamma * f° : f in C(apex, c) } for every object c, each
  // stored sorted.
  struct HFunctor {
    std::vector<std::vector<NormalCone>> values;

    auto operator<=>(HFunctor const&) const = default;
  };

  HFunctor h_functor(FiniteCategory const& C, NormalCone const& gamma);
  bool     is_subfunctor(HFunctor const& a, HFunctor const& b);

  // The image of gamma * f° under C(g, -): gamma * (f g)°.
  NormalCone h_functor_map(FiniteCategory const& C,
                           NormalCone const&     gamma,
                           MorphismId            f,
                           MorphismId            g);

  // A natural transformation between two H-functors, given by the index of
  // the image of each element of each component.
  struct NatTrans {
    std::vector<std::vector<std::uint32_t>> components;

    auto operator<=>(NatTrans const&) const = default;
  };

  // The transformation H(g1; -) -> H(g2; -) corresponding to m : apex g2 ->
  // apex g1 under the Yoneda correspondence. Both cones must be idempotent.
  NatTrans yoneda_transform(FiniteCategory const& C,
                            NormalCone const&     g1,
                            HFunctor const&       h1,
                            NormalCone const&     g2,
                            HFunctor const&       h2,
                            MorphismId            m);

  NatTrans identity_transform(HFunctor const& h);
  NatTrans compose(NatTrans const& a, NatTrans const& b);
  bool     is_inclusion_transform(HFunctor const& a, HFunctor const& b, NatTrans const& t);

  // Category laws, subobject axioms, NC1, NC2 and NC3. Candidate cones are
  // tried first for NC3.
  Report verify_normal_category(FiniteCategory const&          C,
                                std::vector<NormalCone> const& candidates = {});

  // Full subcategory on the subobjects of c; objects[i] is the object of C
  // corresponding to object i of the ideal.
  FiniteCategory ideal(FiniteCategory const& C, ObjectId c, std::vector<ObjectId>* objects = nullptr);

  struct CategoryFunctor {
    std::vector<ObjectId>   objects;
    std::vector<MorphismId> morphisms;
  };

  // Throws NotAFunctor if identities or composites are not preserved.
  void check_functor(CategoryFunctor const& F, FiniteCategory const& C, FiniteCategory const& D);

  // Inclusion preservation, fullness, faithfulness and isomorphism on every
  // ideal. Throws NotAFunctor as above.
  Report local_iso_check(CategoryFunctor const& F,
                         FiniteCategory const&  C,
                         FiniteCategory const&  D,
                         std::string const&     suite = "category");

  // Local isomorphism checks plus bijectivity on objects and an order
  // isomorphism of the subobject posets.
  Report isomorphism_check(CategoryFunctor const& F,
                           FiniteCategory const&  C,
                           FiniteCategory const&  D,
                           std::string const&     suite = "category");

}  // namespace regsg
