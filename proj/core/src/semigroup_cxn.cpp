#include "regsg/semigroup_cxn.hpp"

#include <algorithm>
#include <set>

#include "regsg/error.hpp"

namespace regsg {

  namespace {
    enum class Side { Left, Right };

    PrincipalCategory build_principal(FiniteSemigroup const& S, GreenData const& g, Side side) {
      PrincipalCategory P;
      P.object_of.assign(S.order(), kNone);
      auto const& part = side == Side::Left ? g.lclass : g.rclass;
      for (Element e : g.idempotents) {
        bool fresh = true;
        for (std::size_t i = 0; i < P.reps.size() && fresh; ++i) {
          fresh = part[P.reps[i]] != part[e];
        }
        if (fresh) {
          P.reps.push_back(e);
        }
      }
      for (Element x = 0; x < S.order(); ++x) {
        for (std::size_t i = 0; i < P.reps.size(); ++i) {
          if (part[P.reps[i]] == part[x]) {
            P.object_of[x] = static_cast<ObjectId>(i);
          }
        }
      }
      std::vector<std::string> labels;
      std::vector<CatMorphism> mors, incl;
      std::size_t const        n = P.reps.size();
      for (ObjectId a = 0; a < n; ++a) {
        Element const e = P.reps[a];
        labels.push_back(side == Side::Left ? "S" + S.label(e) : S.label(e) + "S");
        for (ObjectId b = 0; b < n; ++b) {
          Element const     f = P.reps[b];
          std::set<Element> carriers;
          for (Element s = 0; s < S.order(); ++s) {
            // eSf for translations on the right, fSe on the left.
            carriers.insert(side == Side::Left ? S.product({e, s, f}) : S.product({f, s, e}));
          }
          for (Element u : carriers) {
            mors.push_back({a, u, b});
          }
          bool const below = side == Side::Left ? S.product(e, f) == e : S.product(f, e) == e;
          if (a != b && below) {
            incl.push_back({a, e, b});
          }
        }
      }
      FiniteCategory::Composer composer;
      if (side == Side::Left) {
        composer = [&S](CatMorphism const& x, CatMorphism const& y) {
          return S.product(x.carrier, y.carrier);
        };
      } else {
        composer = [&S](CatMorphism const& x, CatMorphism const& y) {
          return S.product(y.carrier, x.carrier);
        };
      }
      P.category = FiniteCategory(std::move(labels), std::move(mors), composer, std::move(incl));
      P.category.set_carrier_labels(S.labels());
      return P;
    }

    ObjectId object(PrincipalCategory const& P, Element e, FiniteSemigroup const& S) {
      ObjectId const a = e < P.object_of.size() ? P.object_of[e] : kNone;
      if (a == kNone || !S.is_idempotent(e)) {
        throw Error(ErrorKind::BadIndex, S.label(e) + " is not an idempotent");
      }
      return a;
    }
  }  // namespace

  PrincipalCategory build_LS(FiniteSemigroup const& S, GreenData const& g) {
    return build_principal(S, g, Side::Left);
  }

  PrincipalCategory build_RS(FiniteSemigroup const& S, GreenData const& g) {
    return build_principal(S, g, Side::Right);
  }

  namespace {
    MorphismId rho_in(FiniteSemigroup const& S, PrincipalCategory const& L, Element e, Element u, Element f) {
      ObjectId const a = object(L, e, S), b = object(L, f, S);
      if (u >= S.order() || S.product({e, u, f}) != u) {
        throw Error(ErrorKind::BadIndex, std::to_string(u) + " is not in " + S.label(e) + "S" + S.label(f));
      }
      // rho(e, u, f) = rho(g, gu, f) for g L e.
      auto id = L.category.find({a, S.product(L.reps[a], u), b});
      if (!id) {
        throw Error(ErrorKind::BadIndex, "missing translation");
      }
      return *id;
    }

    MorphismId lambda_in(FiniteSemigroup const& S, PrincipalCategory const& R, Element e, Element u, Element f) {
      ObjectId const a = object(R, e, S), b = object(R, f, S);
      if (u >= S.order() || S.product({f, u, e}) != u) {
        throw Error(ErrorKind::BadIndex, std::to_string(u) + " is not in " + S.label(f) + "S" + S.label(e));
      }
      auto id = R.category.find({a, S.product(u, R.reps[a]), b});
      if (!id) {
        throw Error(ErrorKind::BadIndex, "missing translation");
      }
      return *id;
    }

    NormalCone cone_L(FiniteSemigroup const& S, PrincipalCategory const& L, Element a) {
      ObjectId const apex = L.object_of.at(a);
      NormalCone     cone{apex, {}};
      for (Element e : L.reps) {
        cone.components.push_back(rho_in(S, L, e, S.product(e, a), L.reps[apex]));
      }
      return cone;
    }

    NormalCone cone_R(FiniteSemigroup const& S, PrincipalCategory const& R, Element a) {
      ObjectId const apex = R.object_of.at(a);
      NormalCone     cone{apex, {}};
      for (Element e : R.reps) {
        cone.components.push_back(lambda_in(S, R, e, S.product(a, e), R.reps[apex]));
      }
      return cone;
    }
  }  // namespace

  MorphismId SemigroupCxn::rho(Element e, Element u, Element f) const {
    return rho_in(S, left, e, u, f);
  }

  MorphismId SemigroupCxn::lambda(Element e, Element u, Element f) const {
    return lambda_in(S, right, e, u, f);
  }

  NormalCone SemigroupCxn::principal_cone_L(Element a) const {
    return cone_L(S, left, a);
  }

  NormalCone SemigroupCxn::principal_cone_R(Element a) const {
    return cone_R(S, right, a);
  }

  LinkedObjects SemigroupCxn::linked_pair(Element e) const {
    return {object(left, e, S), object(right, e, S)};
  }

  SemigroupCxn build_GammaS(FiniteSemigroup const& S) {
    SemigroupCxn cxn;
    cxn.S       = S;
    cxn.biorder = build_biorder(S);
    cxn.green   = green(S);
    cxn.left    = build_LS(cxn.S, cxn.green);
    cxn.right   = build_RS(cxn.S, cxn.green);

    FiniteSemigroup const&   T = cxn.S;
    PrincipalCategory const& L = cxn.left;
    PrincipalCategory const& R = cxn.right;

    // eS goes to rho^e, and lambda(e, u, f) to rho(f, u, e).
    std::vector<NormalCone> gamma;
    for (Element e : R.reps) {
      gamma.push_back(cone_L(T, L, e));
    }
    std::vector<MorphismId> gamma_mor;
    for (auto const& m : R.category.morphisms()) {
      gamma_mor.push_back(rho_in(T, L, R.reps[m.cod], m.carrier, R.reps[m.dom]));
    }
    std::vector<NormalCone> delta;
    for (Element e : L.reps) {
      delta.push_back(cone_R(T, R, e));
    }
    std::vector<MorphismId> delta_mor;
    for (auto const& m : L.category.morphisms()) {
      delta_mor.push_back(lambda_in(T, R, L.reps[m.cod], m.carrier, L.reps[m.dom]));
    }
    cxn.X = CrossConnection(L.category, R.category, std::move(gamma), std::move(gamma_mor),
                            std::move(delta), std::move(delta_mor));
    return cxn;
  }

  LinkedPairSemigroup build_S_Gamma(SemigroupCxn const& cxn) {
    std::vector<std::pair<NormalCone, NormalCone>> pairs;
    for (Element a = 0; a < cxn.S.order(); ++a) {
      pairs.emplace_back(cxn.principal_cone_L(a), cxn.principal_cone_R(a));
    }
    LinkedPairSemigroup out = linked_pair_semigroup(cxn.X, pairs, cxn.S.name() + " from cones");
    for (Element a = 0; a < cxn.S.order(); ++a) {
      if (out.source[a] != a) {
        throw Error(ErrorKind::BadIndex, cxn.S.label(a) + " and " + cxn.S.label(out.source[a])
                                             + " have the same cone pair");
      }
    }
    return out;
  }

  BiorderedSet biorder_of_EGamma(SemigroupCxn const& cxn) {
    return biorder_of_linked_pairs(cxn.X);
  }

  Report verify_semigroup_cxn(SemigroupCxn const& cxn) {
    FiniteSemigroup const& S  = cxn.S;
    FiniteCategory const&  LS = cxn.LS();
    FiniteCategory const&  RS = cxn.RS();
    Report                 r;

    std::vector<NormalCone> lc, rc;
    for (Element e : cxn.green.idempotents) {
      lc.push_back(cxn.principal_cone_L(e));
      rc.push_back(cxn.principal_cone_R(e));
    }
    Report const left  = verify_normal_category(LS, lc);
    Report const right = verify_normal_category(RS, rc);
    for (auto rec : left.records()) {
      rec.suite = "cxn";
      rec.check = "LS-" + rec.check;
      r.add(rec);
    }
    for (auto rec : right.records()) {
      rec.suite = "cxn";
      rec.check = "RS-" + rec.check;
      r.add(rec);
    }

    Check homs("cxn", "hom-set-sizes");
    for (ObjectId a = 0; a < LS.object_count(); ++a) {
      for (ObjectId b = 0; b < LS.object_count(); ++b) {
        std::set<Element> eSf;
        for (Element s = 0; s < S.order(); ++s) {
          eSf.insert(S.product({cxn.left.reps[a], s, cxn.left.reps[b]}));
        }
        homs.expect(LS.hom(a, b).size() == eSf.size(),
                    [&] { return LS.label(a) + " -> " + LS.label(b); });
      }
    }
    homs.into(r);

    Check cones("cxn", "principal-cones");
    for (Element a = 0; a < S.order(); ++a) {
      NormalCone const ra = cxn.principal_cone_L(a);
      NormalCone const la = cxn.principal_cone_R(a);
      auto             who = [&] { return "cones of " + S.label(a); };
      cones.expect(is_normal_cone(LS, ra) && is_normal_cone(RS, la), who);
      std::vector<ObjectId> expected_l, expected_r;
      for (Element e : cxn.green.idempotents) {
        if (cxn.green.R(e, a)) {
          expected_l.push_back(cxn.left.object_of[e]);
        }
        if (cxn.green.L(e, a)) {
          expected_r.push_back(cxn.right.object_of[e]);
        }
      }
      std::sort(expected_l.begin(), expected_l.end());
      expected_l.erase(std::unique(expected_l.begin(), expected_l.end()), expected_l.end());
      std::sort(expected_r.begin(), expected_r.end());
      expected_r.erase(std::unique(expected_r.begin(), expected_r.end()), expected_r.end());
      cones.expect(m_set_of_cone(LS, ra) == expected_l && m_set_of_cone(RS, la) == expected_r, who);
      for (Element b = 0; b < S.order(); ++b) {
        Element const ab = S.product(a, b);
        cones.expect(cone_compose(LS, ra, cxn.principal_cone_L(b)) == cxn.principal_cone_L(ab)
                         && cone_compose(RS, cxn.principal_cone_R(b), la) == cxn.principal_cone_R(ab),
                     [&] { return "products of cones of " + S.label(a) + " and " + S.label(b); });
      }
    }
    cones.into(r);

    r.merge(verify_cross_connection(cxn.X, "cxn"));

    Check linked("cxn", "linked-pairs");
    std::vector<LinkedObjects> expected;
    for (Element e : cxn.green.idempotents) {
      expected.push_back(cxn.linked_pair(e));
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    linked.expect(expected == cxn.X.linked() && expected.size() == cxn.green.idempotents.size(),
                  [&] { return std::to_string(cxn.X.linked().size()) + " linked pairs"; });
    for (Element e : cxn.green.idempotents) {
      auto [c, d] = cxn.linked_pair(e);
      try {
        linked.expect(cxn.X.gamma_cone(c, d) == cxn.principal_cone_L(e)
                          && cxn.X.delta_cone(c, d) == cxn.principal_cone_R(e),
                      [&] { return "cones at " + S.label(e); });
      } catch (Error const& err) {
        linked.fail(err.what());
      }
    }
    linked.into(r);
    if (!linked.ok()) {
      return r;
    }

    Check tr("cxn", "transpose-rule");
    for (Element e : cxn.green.idempotents) {
      for (Element f : cxn.green.idempotents) {
        auto const from = cxn.linked_pair(e);
        auto const to   = cxn.linked_pair(f);
        auto const t    = transposes(cxn.X, from, to);
        auto const& hom = LS.hom(from.first, to.first);
        for (std::size_t i = 0; i < hom.size(); ++i) {
          // rho(e, u, f) transposes to lambda(f, u, e).
          Element const u = S.product(e, LS.morphism(hom[i]).carrier);
          tr.expect(t[i] == cxn.lambda(f, u, e), [&] { return LS.to_string(hom[i]); });
        }
      }
    }
    tr.into(r);

    Check sg("cxn", "cone-pair-semigroup");
    try {
      LinkedPairSemigroup const T = build_S_Gamma(cxn);
      std::vector<Element>      id(S.order());
      for (Element a = 0; a < S.order(); ++a) {
        id[a] = a;
      }
      sg.expect(is_isomorphism(S, T.semigroup, id), [] { return "a -> (rho^a, lambda^a) is not a morphism"; });
      for (Element a = 0; a < S.order(); ++a) {
        bool const linked_idem = std::find(cxn.green.idempotents.begin(), cxn.green.idempotents.end(), a)
                                 != cxn.green.idempotents.end();
        sg.expect(T.semigroup.is_idempotent(a) == linked_idem, [&] { return S.label(a); });
      }
    } catch (Error const& err) {
      sg.fail(err.what());
    }
    sg.into(r);

    Check bo("cxn", "linked-biorder");
    BiorderedSet const  EG = biorder_of_EGamma(cxn);
    std::vector<Vertex> map;
    for (Vertex v = 0; v < cxn.biorder.size(); ++v) {
      auto [c, d] = cxn.linked_pair(cxn.biorder.element(v));
      map.push_back(static_cast<Vertex>(cxn.X.linked_index(c, d)));
    }
    bo.expect(is_biorder_isomorphism(cxn.biorder, EG, map), [] { return "e -> (Se, eS)"; });
    bo.into(r);
    return r;
  }

}  // namespace regsg
