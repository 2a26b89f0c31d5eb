#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regsg/biorder.hpp"
#include "regsg/echain.hpp"
#include "regsg/report.hpp"
#include "regsg/semigroup.hpp"

namespace regsg {

  using MorphismId                  = std::uint32_t;
  inline constexpr MorphismId kNone = static_cast<MorphismId>(-1);

  // A finite ordered groupoid whose objects are the vertices of a biordered
  // set, together with an evaluation of E-chains. All tables are materialised
  // so that the verifiers below only ever look things up. The fields are
  // public on purpose: tests perturb them to check that faults are caught.
  struct OrderedGroupoid {
    BiorderedSet             objects;
    std::vector<Vertex>      dom;
    std::vector<Vertex>      cod;
    std::vector<MorphismId>  inverse;
    std::vector<MorphismId>  identity;  // per object
    std::vector<MorphismId>  product;   // row major, kNone if undefined
    std::vector<bool>        order;     // order[a * size() + b] iff a <= b
    std::vector<std::string> labels;
    std::function<MorphismId(EChain const&)> evaluate;

    std::size_t size() const noexcept {
      return dom.size();
    }
    bool leq(MorphismId a, MorphismId b) const {
      return order[a * size() + b];
    }
    MorphismId compose(MorphismId a, MorphismId b) const {
      return product[a * size() + b];
    }
    MorphismId evaluate_path(std::vector<Vertex> const& path) const;

    // Unique u <= x with dom u = e (resp. cod u = f), else kNone.
    MorphismId restrict_to(Vertex e, MorphismId x) const;
    MorphismId corestrict_to(MorphismId x, Vertex f) const;
  };

  Report verify_ordered_axioms(OrderedGroupoid const& G);

  // Evaluation is checked on canonical chains with at most max_vertices
  // vertices.
  Report verify_inductive_axioms(OrderedGroupoid const& G, std::size_t max_vertices = 4);

  struct PClasses {
    std::vector<MorphismId> class_of;         // per morphism, index into reps
    std::vector<MorphismId> representatives;  // least morphism of each class
    Report                  report;           // equivalence relation checks
  };

  PClasses p_classes(OrderedGroupoid const& G);

  // The morphism obtained from representatives x, y and h in S(r(x), d(y)).
  MorphismId pseudo_product_rep(OrderedGroupoid const& G,
                                MorphismId             x,
                                MorphismId             y,
                                Vertex                 h);

  // Class of the pseudo-product of two classes using the least choices.
  std::size_t pseudo_product(OrderedGroupoid const& G,
                             PClasses const&        P,
                             std::size_t            X,
                             std::size_t            Y);

  // Same class for every choice of representatives and sandwich element.
  Report verify_pseudo_product(OrderedGroupoid const& G, PClasses const& P);

  // The semigroup of p-classes under the pseudo-product. Throws
  // NotAssociative if the product is not associative.
  FiniteSemigroup reconstruct_semigroup(OrderedGroupoid const&   G,
                                        PClasses const&          P,
                                        std::vector<std::string> labels = {});

  struct IGMorphism {
    Element x;
    Element x_prime;

    auto operator<=>(IGMorphism const&) const = default;
  };

  // G(S): pairs (x, x') with x' an inverse of x.
  class InductiveGroupoid {
   public:
    explicit InductiveGroupoid(FiniteSemigroup S);

    FiniteSemigroup const& semigroup() const noexcept {
      return S_;
    }
    GreenData const& green() const noexcept {
      return green_;
    }
    BiorderedSet const& biorder() const noexcept {
      return groupoid_.objects;
    }
    std::vector<IGMorphism> const& morphisms() const noexcept {
      return morphisms_;
    }
    OrderedGroupoid const& groupoid() const noexcept {
      return groupoid_;
    }

    std::optional<MorphismId> find(IGMorphism m) const;
    IGMorphism const&         at(MorphismId id) const {
      return morphisms_.at(id);
    }

    Element domain(IGMorphism m) const {
      return S_.product(m.x, m.x_prime);
    }
    Element codomain(IGMorphism m) const {
      return S_.product(m.x_prime, m.x);
    }

    // (ex, x'e) and (xf, fx'). Throw NotBelow outside the order ideal.
    IGMorphism restrict(Element e, IGMorphism m) const;
    IGMorphism corestrict(IGMorphism m, Element f) const;

    // (e0 e1 ... en, en ... e1 e0) for a chain of vertices of biorder().
    IGMorphism evaluate(EChain const& c) const;

    bool leq(IGMorphism a, IGMorphism b) const;

    // Label of the element shared by each p-class.
    std::vector<std::string> class_labels(PClasses const& P) const;

   private:
    FiniteSemigroup                       S_;
    GreenData                             green_;
    std::vector<IGMorphism>               morphisms_;
    std::map<IGMorphism, MorphismId>      index_;
    OrderedGroupoid                       groupoid_;
  };

  // Throws NotRegular.
  InductiveGroupoid build_IG(FiniteSemigroup const& S);

}  // namespace regsg
