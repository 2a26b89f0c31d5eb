#include "regsg/ind_from_cxn.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "regsg/error.hpp"

namespace regsg {

  namespace {
    char const* const kSuite = "ind-from-cxn";

    FiniteSemigroup const& sg(GammaGroupoid const& G) {
      return G.cxn->S;
    }

    LinkedObjects pair_of(GammaGroupoid const& G, Vertex v) {
      return G.cxn->X.linked().at(v);
    }

    // Reads x and x' back from the carriers: rho(e, x, f) is stored as
    // rho(e0, e0 x, f) for the representative e0 of Se, and e e0 = e.
    PairedIso from_morphisms(GammaGroupoid const& G, MorphismId rho, MorphismId lambda, Vertex dom, Vertex cod) {
      FiniteSemigroup const& S = sg(G);
      Element const          e = G.idempotent_of.at(dom);
      Element const          x = S.product(e, G.cxn->LS().morphism(rho).carrier);
      Element const          y = S.product(G.cxn->RS().morphism(lambda).carrier, e);
      return {rho, lambda, x, y, dom, cod};
    }

    std::string show(GammaGroupoid const& G, PairedIso const& m) {
      FiniteSemigroup const& S = sg(G);
      return "(rho_" + S.label(m.x) + ", lambda_" + S.label(m.x_prime) + ")";
    }

    bool is_inverse(FiniteSemigroup const& S, Element x, Element y) {
      return S.product({x, y, x}) == x && S.product({y, x, y}) == y;
    }

    void absorb(Report& into, Report const& from, std::string const& prefix) {
      for (CheckRecord rec : from.records()) {
        rec.suite = kSuite;
        rec.check = prefix + rec.check;
        into.add(std::move(rec));
      }
    }
  }  // namespace

  std::optional<MorphismId> GammaGroupoid::find(PairedIso const& m) const {
    auto it = std::lower_bound(morphisms.begin(), morphisms.end(), m);
    if (it == morphisms.end() || *it != m) {
      return std::nullopt;
    }
    return static_cast<MorphismId>(it - morphisms.begin());
  }

  Vertex GammaGroupoid::vertex_of(Element e) const {
    auto [c, d] = cxn->linked_pair(e);
    return static_cast<Vertex>(cxn->X.linked_index(c, d));
  }

  GammaGroupoid build_G_Gamma(SemigroupCxn const& cxn) {
    GammaGroupoid G;
    G.cxn     = &cxn;
    G.objects = biorder_of_EGamma(cxn);
    G.idempotent_of.assign(G.objects.size(), 0);
    std::vector<bool> seen(G.objects.size(), false);
    for (Element e : cxn.green.idempotents) {
      Vertex const v = G.vertex_of(e);
      if (seen[v]) {
        throw Error(ErrorKind::BadIndex, "two idempotents share the pair of " + cxn.S.label(e));
      }
      seen[v]            = true;
      G.idempotent_of[v] = e;
    }

    FiniteCategory const& LS = cxn.LS();
    FiniteCategory const& RS = cxn.RS();
    auto const&           linked = cxn.X.linked();
    for (Vertex u = 0; u < linked.size(); ++u) {
      for (Vertex v = 0; v < linked.size(); ++v) {
        auto const& hom = LS.hom(linked[u].first, linked[v].first);
        if (std::none_of(hom.begin(), hom.end(), [&](MorphismId f) { return LS.is_iso(f); })) {
          continue;
        }
        auto const t = transposes(cxn.X, linked[u], linked[v]);
        for (std::size_t i = 0; i < hom.size(); ++i) {
          if (!LS.is_iso(hom[i]) || t[i] == kNone || !RS.is_iso(t[i])) {
            continue;
          }
          G.morphisms.push_back(from_morphisms(G, hom[i], RS.iso_inverse(t[i]), u, v));
        }
      }
    }
    std::sort(G.morphisms.begin(), G.morphisms.end());
    return G;
  }

  PairedIso paired_iso(GammaGroupoid const& G, Element x, Element x_prime) {
    FiniteSemigroup const& S = sg(G);
    if (!is_inverse(S, x, x_prime)) {
      throw Error(ErrorKind::BadIndex, S.label(x_prime) + " is not an inverse of " + S.label(x));
    }
    Element const e = S.product(x, x_prime);
    Element const f = S.product(x_prime, x);
    return {G.cxn->rho(e, x, f), G.cxn->lambda(e, x_prime, f), x, x_prime, G.vertex_of(e), G.vertex_of(f)};
  }

  PairedIso identity_pair(GammaGroupoid const& G, Vertex v) {
    Element const e = G.idempotent_of.at(v);
    return paired_iso(G, e, e);
  }

  PairedIso star_compose(GammaGroupoid const& G, PairedIso const& a, PairedIso const& b) {
    if (a.cod != b.dom) {
      throw Error(ErrorKind::NotComposable, show(G, a) + " * " + show(G, b));
    }
    return from_morphisms(G, G.cxn->LS().compose(a.rho, b.rho), G.cxn->RS().compose(a.lambda, b.lambda),
                          a.dom, b.cod);
  }

  PairedIso inverse(GammaGroupoid const& G, PairedIso const& m) {
    return from_morphisms(G, G.cxn->LS().iso_inverse(m.rho), G.cxn->RS().iso_inverse(m.lambda), m.cod, m.dom);
  }

  bool leq_Gamma(GammaGroupoid const& G, PairedIso const& a, PairedIso const& b) {
    FiniteCategory const& LS = G.cxn->LS();
    FiniteCategory const& RS = G.cxn->RS();
    auto const [ca, da]      = pair_of(G, a.dom);
    auto const [cb, db]      = pair_of(G, b.dom);
    auto const [ca2, da2]    = pair_of(G, a.cod);
    auto const [cb2, db2]    = pair_of(G, b.cod);
    MorphismId const jc  = LS.inclusion(ca, cb);
    MorphismId const jc2 = LS.inclusion(ca2, cb2);
    MorphismId const jd  = RS.inclusion(da, db);
    MorphismId const jd2 = RS.inclusion(da2, db2);
    if (jc == kNone || jc2 == kNone || jd == kNone || jd2 == kNone) {
      return false;
    }
    return LS.compose(a.rho, jc2) == LS.compose(jc, b.rho) && RS.compose(a.lambda, jd2) == RS.compose(jd, b.lambda);
  }

  PairedIso restrict_Gamma(GammaGroupoid const& G, Vertex g, PairedIso const& m) {
    FiniteSemigroup const& S = sg(G);
    if (!G.objects.omega(g, m.dom)) {
      throw Error(ErrorKind::NotBelow, G.objects.label(g) + " is not below " + G.objects.label(m.dom));
    }
    Element const e = G.idempotent_of[g];
    Element const h = S.product({m.x_prime, e, m.x});
    return from_morphisms(G, G.cxn->rho(e, S.product(e, m.x), h), G.cxn->lambda(e, S.product(m.x_prime, e), h), g,
                          G.vertex_of(h));
  }

  PairedIso corestrict_Gamma(GammaGroupoid const& G, PairedIso const& m, Vertex h) {
    FiniteSemigroup const& S = sg(G);
    if (!G.objects.omega(h, m.cod)) {
      throw Error(ErrorKind::NotBelow, G.objects.label(h) + " is not below " + G.objects.label(m.cod));
    }
    Element const f = G.idempotent_of[h];
    Element const e = S.product({m.x, f, m.x_prime});
    return from_morphisms(G, G.cxn->rho(e, S.product(m.x, f), f), G.cxn->lambda(e, S.product(f, m.x_prime), f),
                          G.vertex_of(e), h);
  }

  PairedIso eval_epsilon_Gamma(GammaGroupoid const& G, EChain const& c) {
    FiniteSemigroup const& S = sg(G);
    std::vector<Element>   forward, backward;
    for (Vertex v : c.vertices) {
      forward.push_back(G.idempotent_of.at(v));
    }
    backward.assign(forward.rbegin(), forward.rend());
    Element const w  = S.product(forward);
    Element const wp = S.product(backward);
    if (!is_inverse(S, w, wp) || S.product(w, wp) != forward.front() || S.product(wp, w) != forward.back()) {
      throw Error(ErrorKind::NotAnEPath, to_string(G.objects, c));
    }
    return paired_iso(G, w, wp);
  }

  OrderedGroupoid to_ordered_groupoid(GammaGroupoid const& G) {
    OrderedGroupoid O;
    O.objects           = G.objects;
    std::size_t const m = G.morphisms.size();
    auto              need = [&](PairedIso const& p, std::string const& what) {
      auto id = G.find(p);
      if (!id) {
        throw Error(ErrorKind::NotComposable, what + " " + show(G, p) + " is missing");
      }
      return *id;
    };
    for (auto const& p : G.morphisms) {
      O.dom.push_back(p.dom);
      O.cod.push_back(p.cod);
      O.inverse.push_back(need(inverse(G, p), "inverse"));
      O.labels.push_back(show(G, p));
    }
    for (Vertex v = 0; v < G.objects.size(); ++v) {
      O.identity.push_back(need(identity_pair(G, v), "identity"));
    }
    O.product.assign(m * m, kNone);
    O.order.assign(m * m, false);
    for (MorphismId a = 0; a < m; ++a) {
      for (MorphismId b = 0; b < m; ++b) {
        PairedIso const& p = G.morphisms[a];
        PairedIso const& q = G.morphisms[b];
        if (p.cod == q.dom) {
          O.product[a * m + b] = need(star_compose(G, p, q), "composite");
        }
        O.order[a * m + b] = leq_Gamma(G, p, q);
      }
    }
    O.evaluate = [G](EChain const& c) -> MorphismId {
      try {
        return G.find(eval_epsilon_Gamma(G, c)).value_or(kNone);
      } catch (Error const&) {
        return kNone;
      }
    };
    return O;
  }

  PhiResult build_Phi(GammaGroupoid const& G, InductiveGroupoid const& IG, std::size_t max_vertices) {
    FiniteSemigroup const& S  = sg(G);
    OrderedGroupoid const& H  = IG.groupoid();
    BiorderedSet const&    EG = G.objects;
    PhiResult              out;
    Report&                r = out.report;

    Check data(kSuite, "paired-data");
    for (auto const& m : G.morphisms) {
      data.expect(is_inverse(S, m.x, m.x_prime) && paired_iso(G, m.x, m.x_prime) == m,
                  [&] { return show(G, m); });
    }
    data.into(r);

    for (Vertex v = 0; v < EG.size(); ++v) {
      out.objects.push_back(IG.biorder().vertex_of(G.idempotent_of[v]).value());
    }
    Check bio(kSuite, "v-biorder-isomorphism");
    bio.expect(is_biorder_isomorphism(EG, IG.biorder(), out.objects), [] { return "(Se, eS) -> e"; });
    bio.into(r);

    Check defined(kSuite, "phi-defined");
    for (auto const& m : G.morphisms) {
      auto id = IG.find({m.x, m.x_prime});
      defined.expect(id.has_value(), [&] { return show(G, m); });
      out.morphisms.push_back(id.value_or(kNone));
    }
    defined.into(r);
    if (!defined.ok()) {
      return out;
    }
    auto phi = [&](PairedIso const& p) -> MorphismId {
      auto id = IG.find({p.x, p.x_prime});
      return id ? *id : kNone;
    };

    Check faithful(kSuite, "faithful");
    std::vector<MorphismId> seen(H.size(), kNone);
    for (MorphismId a = 0; a < G.morphisms.size(); ++a) {
      MorphismId const t = out.morphisms[a];
      faithful.expect(seen[t] == kNone, [&] { return show(G, G.morphisms[a]) + " and " + show(G, G.morphisms[seen[t]]); });
      seen[t] = a;
    }
    faithful.into(r);

    Check full(kSuite, "full");
    for (MorphismId t = 0; t < H.size(); ++t) {
      full.expect(seen[t] != kNone, [&] { return H.labels[t] + " has no preimage"; });
    }
    full.into(r);

    Check functor(kSuite, "functor");
    for (Vertex v = 0; v < EG.size(); ++v) {
      functor.expect(phi(identity_pair(G, v)) == H.identity[out.objects[v]], [&] { return EG.label(v); });
    }
    for (MorphismId a = 0; a < G.morphisms.size(); ++a) {
      PairedIso const& p = G.morphisms[a];
      functor.expect(H.dom[out.morphisms[a]] == out.objects[p.dom] && H.cod[out.morphisms[a]] == out.objects[p.cod],
                     [&] { return "ends of " + show(G, p); });
      functor.expect(phi(inverse(G, p)) == H.inverse[out.morphisms[a]], [&] { return "inverse of " + show(G, p); });
      for (PairedIso const& q : G.morphisms) {
        if (p.cod != q.dom) {
          continue;
        }
        functor.expect(phi(star_compose(G, p, q)) == H.compose(out.morphisms[a], phi(q)),
                       [&] { return show(G, p) + " * " + show(G, q); });
      }
    }
    functor.into(r);

    Check order(kSuite, "order");
    for (MorphismId a = 0; a < G.morphisms.size(); ++a) {
      for (MorphismId b = 0; b < G.morphisms.size(); ++b) {
        order.expect(leq_Gamma(G, G.morphisms[a], G.morphisms[b]) == H.leq(out.morphisms[a], out.morphisms[b]),
                     [&] { return show(G, G.morphisms[a]) + " <= " + show(G, G.morphisms[b]); });
      }
    }
    order.into(r);

    Check idorder(kSuite, "omega-on-identities");
    for (Vertex u = 0; u < EG.size(); ++u) {
      for (Vertex v = 0; v < EG.size(); ++v) {
        idorder.expect(leq_Gamma(G, identity_pair(G, u), identity_pair(G, v)) == EG.omega(u, v),
                       [&] { return EG.label(u) + " <= " + EG.label(v); });
      }
    }
    idorder.into(r);

    Check restr(kSuite, "restrictions");
    for (auto const& m : G.morphisms) {
      IGMorphism const xm{m.x, m.x_prime};
      for (Vertex g = 0; g < EG.size(); ++g) {
        Element const e = G.idempotent_of[g];
        if (EG.omega(g, m.dom)) {
          PairedIso const u = restrict_Gamma(G, g, m);
          restr.expect(leq_Gamma(G, u, m) && u.dom == g && IG.find(IG.restrict(e, xm)) == IG.find({u.x, u.x_prime}),
                       [&] { return EG.label(g) + " | " + show(G, m); });
        }
        if (EG.omega(g, m.cod)) {
          PairedIso const u = corestrict_Gamma(G, m, g);
          restr.expect(leq_Gamma(G, u, m) && u.cod == g
                           && IG.find(IG.corestrict(xm, e)) == IG.find({u.x, u.x_prime}),
                       [&] { return show(G, m) + " | " + EG.label(g); });
        }
      }
    }
    restr.into(r);

    Check square(kSuite, "evaluation-square");
    for (EChain const& c : enumerate_chains(EG, max_vertices)) {
      EChain image;
      for (Vertex v : c.vertices) {
        image.vertices.push_back(out.objects[v]);
      }
      try {
        square.expect(phi(eval_epsilon_Gamma(G, c)) == H.evaluate(image), [&] { return to_string(EG, c); });
      } catch (Error const& err) {
        square.fail(to_string(EG, c) + ": " + err.what());
      }
    }
    square.into(r);

    Check closure(kSuite, "groupoid-closure");
    try {
      OrderedGroupoid const O = to_ordered_groupoid(G);
      closure.expect(true, [] { return ""; });
      closure.into(r);
      absorb(r, verify_ordered_axioms(O), "");
      absorb(r, verify_inductive_axioms(O, max_vertices), "");
    } catch (Error const& err) {
      closure.fail(err.what());
      closure.into(r);
    }
    return out;
  }

}  // namespace regsg
