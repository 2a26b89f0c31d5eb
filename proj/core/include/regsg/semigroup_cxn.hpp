#pragma once

#include <string>
#include <vector>

#include "regsg/biorder.hpp"
#include "regsg/category.hpp"
#include "regsg/cross_connection.hpp"
#include "regsg/report.hpp"
#include "regsg/semigroup.hpp"

namespace regsg {

  // Objects of L_S are the principal left ideals Se, morphisms Se -> Sf are
  // the right translations by elements of eSf. R_S is the left-right dual.
  // Each object is stored with the least idempotent generating it; triples
  // are kept in that canonical form.
  struct PrincipalCategory {
    FiniteCategory        category;
    std::vector<Element>  reps;       // per object
    std::vector<ObjectId> object_of;  // per element, kNone without an idempotent
  };

  PrincipalCategory build_LS(FiniteSemigroup const& S, GreenData const& g);
  PrincipalCategory build_RS(FiniteSemigroup const& S, GreenData const& g);

  // The cross-connection of a regular semigroup and the data it was built
  // from.
  struct SemigroupCxn {
    FiniteSemigroup   S;
    GreenData         green;
    BiorderedSet      biorder;
    PrincipalCategory left;
    PrincipalCategory right;
    CrossConnection   X;

    FiniteCategory const& LS() const noexcept {
      return X.C();
    }
    FiniteCategory const& RS() const noexcept {
      return X.D();
    }

    // rho(e, u, f) : Se -> Sf with u in eSf, and lambda(e, u, f) : eS -> fS
    // with u in fSe. Throw BadIndex for a carrier outside the hom-set.
    MorphismId rho(Element e, Element u, Element f) const;
    MorphismId lambda(Element e, Element u, Element f) const;

    // rho^a(Se) = rho(e, ea, f) and lambda^a(eS) = lambda(e, ae, f).
    NormalCone principal_cone_L(Element a) const;
    NormalCone principal_cone_R(Element a) const;

    // (Se, eS) for an idempotent e.
    LinkedObjects linked_pair(Element e) const;
  };

  // Throws NotRegular.
  SemigroupCxn build_GammaS(FiniteSemigroup const& S);

  // The semigroup of pairs (rho^a, lambda^a). Throws BadIndex if two
  // elements share a pair.
  LinkedPairSemigroup build_S_Gamma(SemigroupCxn const& cxn);

  BiorderedSet biorder_of_EGamma(SemigroupCxn const& cxn);

  // Normal category axioms on both sides, principal cones, the
  // cross-connection itself, linked pairs, transposes and the recovered
  // semigroup and biorder.
  Report verify_semigroup_cxn(SemigroupCxn const& cxn);

}  // namespace regsg
