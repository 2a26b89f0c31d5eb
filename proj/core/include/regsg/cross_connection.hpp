#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "regsg/biorder.hpp"
#include "regsg/category.hpp"
#include "regsg/report.hpp"
#include "regsg/semigroup.hpp"

namespace regsg {

  using LinkedObjects = std::pair<ObjectId, ObjectId>;

  // A cross-connection between normal categories C and D, and its dual, both
  // given through representing cones. For every object d of D, gamma(d) is an
  // idempotent cone of C whose H-functor is the image of d. A morphism
  // g : d1 -> d2 of D is sent to the natural transformation that corresponds
  // to gamma_mor(g) : apex gamma(d2) -> apex gamma(d1). The dual data works
  // the same way with C and D exchanged.
  class CrossConnection {
   public:
    CrossConnection() = default;
    CrossConnection(FiniteCategory          C,
                    FiniteCategory          D,
                    std::vector<NormalCone> gamma,
                    std::vector<MorphismId> gamma_mor,
                    std::vector<NormalCone> delta,
                    std::vector<MorphismId> delta_mor);

    FiniteCategory const& C() const noexcept {
      return C_;
    }
    FiniteCategory const& D() const noexcept {
      return D_;
    }

    NormalCone const& gamma(ObjectId d) const {
      return gamma_.at(d);
    }
    MorphismId gamma_mor(MorphismId g) const {
      return gamma_mor_.at(g);
    }
    NormalCone const& delta(ObjectId c) const {
      return delta_.at(c);
    }
    MorphismId delta_mor(MorphismId f) const {
      return delta_mor_.at(f);
    }

    HFunctor const& gamma_functor(ObjectId d) const {
      return gamma_h_.at(d);
    }
    HFunctor const& delta_functor(ObjectId c) const {
      return delta_h_.at(c);
    }

    NatTrans gamma_transform(MorphismId g) const;
    NatTrans delta_transform(MorphismId f) const;

    // (c, d) with c in M Gamma(d), sorted.
    std::vector<LinkedObjects> const& linked() const noexcept {
      return linked_;
    }
    bool                     is_linked(ObjectId c, ObjectId d) const;
    std::size_t              linked_index(ObjectId c, ObjectId d) const;

    // The unique idempotent cone of C with apex c and H-functor Gamma(d), and
    // its counterpart in D. Throw NotConnected for unlinked pairs.
    NormalCone const& gamma_cone(ObjectId c, ObjectId d) const;
    NormalCone const& delta_cone(ObjectId c, ObjectId d) const;

    // Idempotent normal cones, when the categories are small enough to
    // enumerate them, and the distinct H-functors they give.
    bool cones_enumerated() const noexcept {
      return enumerated_;
    }
    std::vector<NormalCone> const& idempotent_cones_C() const noexcept {
      return cones_C_;
    }
    std::vector<NormalCone> const& idempotent_cones_D() const noexcept {
      return cones_D_;
    }
    std::vector<HFunctor> const& dual_objects_C() const noexcept {
      return dual_C_;
    }
    std::vector<HFunctor> const& dual_objects_D() const noexcept {
      return dual_D_;
    }

   private:
    FiniteCategory             C_;
    FiniteCategory             D_;
    std::vector<NormalCone>    gamma_;
    std::vector<MorphismId>    gamma_mor_;
    std::vector<NormalCone>    delta_;
    std::vector<MorphismId>    delta_mor_;
    std::vector<HFunctor>      gamma_h_;
    std::vector<HFunctor>      delta_h_;
    std::vector<LinkedObjects> linked_;
    std::vector<NormalCone>    gamma_cone_;
    std::vector<NormalCone>    delta_cone_;
    bool                       enumerated_ = false;
    std::vector<NormalCone>    cones_C_;
    std::vector<NormalCone>    cones_D_;
    std::vector<HFunctor>      dual_C_;
    std::vector<HFunctor>      dual_D_;
  };

  // For f : c -> c' in C and linked pairs (c, d), (c', d'), the unique
  // f* : d' -> d in D making the transpose square commute.
  MorphismId transpose(CrossConnection const& X,
                       MorphismId             f,
                       LinkedObjects          from,
                       LinkedObjects          to);

  // Transposes of all of C(c, c'), in hom order; kNone where none exists.
  std::vector<MorphismId> transposes(CrossConnection const& X, LinkedObjects from, LinkedObjects to);

  // Functor laws, local isomorphism and the connection condition for both
  // Gamma and its dual, plus coherence of the linked pairs and transposes.
  Report verify_cross_connection(CrossConnection const& X, std::string const& suite = "cxn");

  struct LinkedPairSemigroup {
    std::vector<std::pair<NormalCone, NormalCone>> elements;
    // Position in elements of each supplied pair.
    std::vector<Element> source;
    FiniteSemigroup      semigroup;
  };

  // Pairs of cones under (g, d)(g', d') = (g . g', d' . d). Duplicates are
  // merged; throws NotComposable if the set is not closed.
  LinkedPairSemigroup linked_pair_semigroup(CrossConnection const&                              X,
                                            std::vector<std::pair<NormalCone, NormalCone>> const& pairs,
                                            std::string name = "");

  // Biordered set on the linked pairs: omega^l from the subobjects of C,
  // omega^r from the subobjects of D, basic products from cone composition.
  BiorderedSet biorder_of_linked_pairs(CrossConnection const& X);

}  // namespace regsg
