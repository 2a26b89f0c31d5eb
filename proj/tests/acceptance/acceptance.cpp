// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "faults.hpp"
#include "regsg/biorder.hpp"
#include "regsg/corpus.hpp"
#include "regsg/cxn_from_ind.hpp"
#include "regsg/ind_from_cxn.hpp"
#include "regsg/inductive_groupoid.hpp"
#include "regsg/semigroup_cxn.hpp"

using namespace regsg;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string note;

    void require(bool cond, std::string const& what) {
      if (!cond && pass) {
        pass = false;
        note = what;
      }
    }
    void require_ok(Report const& r, std::string const& where) {
      for (auto const& rec : r.records()) {
        require(rec.status == Status::Pass, where + " " + rec.suite + "/" + rec.check + ": " + rec.witness);
      }
    }
  };

  std::vector<FiniteSemigroup> corpus_members() {
    std::vector<FiniteSemigroup> out;
    for (auto const& name : corpus::names()) {
      out.push_back(corpus::by_name(name));
    }
    return out;
  }

  Outcome axiom_suites() {
    Outcome    o;
    auto const start = std::chrono::steady_clock::now();
    // Every axiom must have been exercised somewhere in the corpus.
    std::map<std::string, std::size_t> checked;
    for (auto const& S : corpus_members()) {
      InductiveGroupoid const IG(S);
      Report                  r = verify_ordered_axioms(IG.groupoid());
      r.merge(verify_inductive_axioms(IG.groupoid(), 4));
      o.require_ok(r, S.name());
      for (auto id : {"OG1", "OG2", "OG3", "OG3*", "IG1", "IG1*", "IG2"}) {
        CheckRecord const* rec = r.find(id);
        o.require(rec != nullptr, S.name() + " has no " + id + " check");
        if (rec) {
          checked[id] += rec->checked;
        }
      }
    }
    for (auto const& [id, n] : checked) {
      o.require(n > 0, id + " never checked anything");
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
    if (o.pass) {
      o.note = std::to_string(secs).substr(0, 5) + " s";
    }
    return o;
  }

  Outcome round_trip_groupoid() {
    Outcome o;
    for (auto const& S : corpus_members()) {
      InductiveGroupoid const IG(S);
      PClasses const          P = p_classes(IG.groupoid());
      o.require_ok(P.report, S.name());
      o.require_ok(verify_pseudo_product(IG.groupoid(), P), S.name());
      FiniteSemigroup const T = reconstruct_semigroup(IG.groupoid(), P);
      o.require(find_isomorphism(S, T).has_value(), S.name() + " not recovered");
    }
    return o;
  }

  Outcome round_trip_cxn() {
    Outcome o;
    for (auto const& S : corpus_members()) {
      SemigroupCxn const        X  = build_GammaS(S);
      LinkedPairSemigroup const SG = build_S_Gamma(X);
      o.require(find_isomorphism(S, SG.semigroup).has_value(), S.name() + " not recovered");
      std::set<Element> idem, expected;
      for (Element p = 0; p < SG.semigroup.order(); ++p) {
        if (SG.semigroup.is_idempotent(p)) {
          idem.insert(p);
        }
      }
      for (Element e : idempotents(S)) {
        expected.insert(SG.source[e]);
      }
      o.require(idem == expected, S.name() + " idempotent pairs differ");
    }
    return o;
  }

  Outcome groupoid_of_cxn() {
    Outcome o;
    for (auto const& S : corpus_members()) {
      SemigroupCxn const      X = build_GammaS(S);
      InductiveGroupoid const IG(S);
      PhiResult const         phi = build_Phi(build_G_Gamma(X), IG, 4);
      o.require_ok(phi.report, S.name());
      for (auto id : {"v-biorder-isomorphism", "faithful", "full", "order", "evaluation-square", "IG2"}) {
        o.require(phi.report.find(id) != nullptr, S.name() + " has no " + id + " check");
      }
    }
    return o;
  }

  Outcome cxn_of_groupoid() {
    Outcome o;
    for (auto const& S : corpus_members()) {
      InductiveGroupoid const IG(S);
      SemigroupCxn const      SC = build_GammaS(S);
      GroupoidCxn const       X  = build_GammaG(IG);
      CategoryFunctor const   FL = functor_frakL(X, SC);
      CategoryFunctor const   FR = functor_frakR(X, SC);
      Report                  r  = verify_groupoid_cxn(X);
      r.merge(verify_frak_well_defined(X, SC, FL, FR));
      r.merge(verify_cxn_isomorphism(X, SC, FL, FR));
      o.require_ok(r, S.name());
      for (auto id : {"LG-NC1", "LG-NC2", "LG-NC3", "RG-NC1", "RG-NC2", "RG-NC3", "M1", "M2", "E/L-normal-retractions",
                      "E/R-normal-retractions", "frakL-v-bijective", "frakR-v-bijective"}) {
        o.require(r.find(id) != nullptr, S.name() + " has no " + id + " check");
      }
    }
    return o;
  }

  Outcome biorder_coherence() {
    Outcome o;
    for (auto const& S : corpus_members()) {
      InductiveGroupoid const IG(S);
      BiorderedSet const&     E  = IG.biorder();
      SemigroupCxn const      SC = build_GammaS(S);
      GroupoidCxn const       X  = build_GammaG(IG);
      // (Se, eS) -> e on the semigroup side.
      GammaGroupoid const G = build_G_Gamma(SC);
      std::vector<Vertex> from_s;
      for (Vertex v = 0; v < G.objects.size(); ++v) {
        from_s.push_back(E.vertex_of(G.idempotent_of[v]).value_or(BiorderedSet::kUndefined));
      }
      o.require(is_biorder_isomorphism(biorder_of_EGamma(SC), E, from_s), S.name() + ": E_Gamma_S differs from E(S)");
      // (<-e, ->e) -> e on the groupoid side.
      std::vector<Vertex> from_g;
      for (auto [c, d] : X.X.linked()) {
        Vertex found = BiorderedSet::kUndefined;
        for (Vertex e = 0; e < E.size(); ++e) {
          if (X.left.class_of[e] == c && X.right.class_of[e] == d) {
            found = e;
          }
        }
        from_g.push_back(found);
      }
      o.require(is_biorder_isomorphism(biorder_of_linked_pairs(X.X), E, from_g),
                S.name() + ": E_Gamma_G differs from E(S)");
    }
    return o;
  }

  Outcome desk_checks() {
    Outcome                                   o;
    std::map<std::string, std::size_t> const idem{{"T3", 10}, {"T2", 3}, {"B2", 3}, {"RB22", 4}, {"I2", 4}, {"SL2", 2}};
    for (auto const& S : corpus_members()) {
      o.require(idempotents(S).size() == idem.at(S.name()), S.name() + " idempotent count");
      GreenData const         g = green(S);
      PrincipalCategory const L = build_LS(S, g);
      for (Element e : g.idempotents) {
        for (Element f : g.idempotents) {
          std::set<Element> eSf;
          for (Element s = 0; s < S.order(); ++s) {
            eSf.insert(S.product({e, s, f}));
          }
          o.require(L.category.hom(L.object_of[e], L.object_of[f]).size() == eSf.size(),
                    S.name() + " |L_S(Se, Sf)| at " + S.label(e) + ", " + S.label(f));
        }
      }
    }
    FiniteSemigroup const S = corpus::rb22();
    BiorderedSet const    E = build_biorder(S);
    auto                  v = [&](std::string const& l) {
      for (Element a = 0; a < S.order(); ++a) {
        if (S.label(a) == l) {
          return *E.vertex_of(a);
        }
      }
      return BiorderedSet::kUndefined;
    };
    o.require(sandwich_set(E, v("(0,0)"), v("(1,1)")) == std::vector<Vertex>{v("(1,0)")}, "RB22 sandwich set");
    return o;
  }

  Outcome fault_injection() {
    Outcome o;
    auto    caught = [&](Report const& r, std::string const& id) {
      CheckRecord const* rec = r.find(id);
      o.require(rec != nullptr, id + " check missing");
      if (rec) {
        o.require(rec->status == Status::Fail && rec->violations > 0 && !rec->witness.empty(),
                  id + " fault went unnoticed");
      }
    };
    caught(faults::og3_dropped_order_pair(), "OG3");
    caught(faults::ig2_perturbed_identity_chain(), "IG2");
    caught(faults::nc2_unsplit_inclusion(), "NC2");
    caught(faults::m2_swapped_frakR(), "M2");
    return o;
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"axiom suites on G(S)", axiom_suites},
      {"round trip through the inductive groupoid", round_trip_groupoid},
      {"round trip through the cross-connection", round_trip_cxn},
      {"G(Gamma_S) is isomorphic to G(S)", groupoid_of_cxn},
      {"Gamma_G is isomorphic to Gamma_S", cxn_of_groupoid},
      {"biordered sets agree", biorder_coherence},
      {"desk checks", desk_checks},
      {"injected faults are reported", fault_injection},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.pass = false;
      o.note = std::string("threw ") + e.what();
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!o.note.empty()) {
      std::cout << " (" << o.note << ")";
    }
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
