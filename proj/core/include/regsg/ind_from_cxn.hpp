#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "regsg/biorder.hpp"
#include "regsg/echain.hpp"
#include "regsg/inductive_groupoid.hpp"
#include "regsg/report.hpp"
#include "regsg/semigroup_cxn.hpp"

namespace regsg {

  // A morphism of G(Gamma_S): an isomorphism rho : Se -> Sf of L_S together
  // with lambda : eS -> fS of R_S such that lambda is the inverse of the
  // transpose of rho. x and x_prime are the elements with rho = rho(e, x, f)
  // and lambda = lambda(e, x', f); dom and cod index linked pairs.
  struct PairedIso {
    MorphismId rho;
    MorphismId lambda;
    Element    x;
    Element    x_prime;
    Vertex     dom;
    Vertex     cod;

    auto operator<=>(PairedIso const&) const = default;
  };

  // The groupoid of paired isomorphisms over the linked pairs of Gamma_S.
  // Holds a pointer to the cross-connection, which must outlive it. The
  // morphism list is kept sorted and is public so that tests can tamper
  // with it.
  struct GammaGroupoid {
    SemigroupCxn const*    cxn = nullptr;
    BiorderedSet           objects;       // E_Gamma, vertex = linked index
    std::vector<Element>   idempotent_of;  // per vertex
    std::vector<PairedIso> morphisms;

    std::optional<MorphismId> find(PairedIso const& m) const;
    // The vertex of the pair (Se, eS).
    Vertex vertex_of(Element e) const;
  };

  GammaGroupoid build_G_Gamma(SemigroupCxn const& cxn);

  // (rho(xx', x, x'x), lambda(xx', x', x'x)). Throws BadIndex unless x' is an
  // inverse of x.
  PairedIso paired_iso(GammaGroupoid const& G, Element x, Element x_prime);
  PairedIso identity_pair(GammaGroupoid const& G, Vertex v);

  // Componentwise composition in L_S and R_S. Throws NotComposable.
  PairedIso star_compose(GammaGroupoid const& G, PairedIso const& a, PairedIso const& b);
  PairedIso inverse(GammaGroupoid const& G, PairedIso const& m);

  // a <= b iff the domain and codomain pairs of a sit under those of b and
  // both squares formed with the inclusions commute.
  bool leq_Gamma(GammaGroupoid const& G, PairedIso const& a, PairedIso const& b);

  // Throw NotBelow unless the given pair sits under the domain (codomain).
  PairedIso restrict_Gamma(GammaGroupoid const& G, Vertex g, PairedIso const& m);
  PairedIso corestrict_Gamma(GammaGroupoid const& G, PairedIso const& m, Vertex h);

  // (rho_w, lambda_w') with w = e0 e1 ... en and w' = en ... e0. Throws
  // NotAnEPath if w' is not an inverse of w.
  PairedIso eval_epsilon_Gamma(GammaGroupoid const& G, EChain const& c);

  // Materialised tables. Throws NotComposable if the morphism list is not
  // closed under composition, inverses and evaluation.
  OrderedGroupoid to_ordered_groupoid(GammaGroupoid const& G);

  struct PhiResult {
    std::vector<Vertex>     objects;    // vertex of E_Gamma -> vertex of E(S)
    std::vector<MorphismId> morphisms;  // morphism of G(Gamma_S) -> of G(S)
    Report                  report;
  };

  // Phi(rho_x, lambda_x') = (x, x'), together with the functor, bijection,
  // order, restriction and evaluation checks, and the ordered and inductive
  // axioms of G(Gamma_S) itself.
  PhiResult build_Phi(GammaGroupoid const&     G,
                      InductiveGroupoid const& IG,
                      std::size_t              max_vertices = 4);

}  // namespace regsg
