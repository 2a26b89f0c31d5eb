#include "regsg/inductive_groupoid.hpp"

#include <algorithm>
#include <memory>

#include "regsg/error.hpp"

namespace regsg {

  MorphismId OrderedGroupoid::evaluate_path(std::vector<Vertex> const& path) const {
    return evaluate(canonicalize(objects, path));
  }

  MorphismId OrderedGroupoid::restrict_to(Vertex e, MorphismId x) const {
    MorphismId found = kNone;
    for (MorphismId u = 0; u < size(); ++u) {
      if (dom[u] == e && leq(u, x)) {
        if (found != kNone) {
          return kNone;
        }
        found = u;
      }
    }
    return found;
  }

  MorphismId OrderedGroupoid::corestrict_to(MorphismId x, Vertex f) const {
    MorphismId found = kNone;
    for (MorphismId u = 0; u < size(); ++u) {
      if (cod[u] == f && leq(u, x)) {
        if (found != kNone) {
          return kNone;
        }
        found = u;
      }
    }
    return found;
  }

  namespace {
    std::vector<std::vector<MorphismId>> down_sets(OrderedGroupoid const& G) {
      std::vector<std::vector<MorphismId>> down(G.size());
      for (MorphismId a = 0; a < G.size(); ++a) {
        for (MorphismId b = 0; b < G.size(); ++b) {
          if (G.leq(a, b)) {
            down[b].push_back(a);
          }
        }
      }
      return down;
    }

    std::vector<std::vector<MorphismId>> outgoing(OrderedGroupoid const& G) {
      std::vector<std::vector<MorphismId>> out(G.objects.size());
      for (MorphismId a = 0; a < G.size(); ++a) {
        out[G.dom[a]].push_back(a);
      }
      return out;
    }
  }  // namespace

  Report verify_ordered_axioms(OrderedGroupoid const& G) {
    std::size_t const m    = G.size();
    auto const        down = down_sets(G);
    auto const        out  = outgoing(G);
    auto              show = [&G](MorphismId a) {
      return [&G, a] { return G.labels.at(a); };
    };
    auto show2 = [&G](MorphismId a, MorphismId b) {
      return [&G, a, b] { return G.labels.at(a) + " / " + G.labels.at(b); };
    };
    Report r;

    Check laws("igroupoid", "groupoid-laws");
    for (Vertex e = 0; e < G.objects.size(); ++e) {
      MorphismId const i = G.identity[e];
      laws.expect(i != kNone && G.dom[i] == e && G.cod[i] == e,
                  [&] { return "identity at " + G.objects.label(e); });
    }
    for (MorphismId x = 0; x < m; ++x) {
      MorphismId const xi = G.inverse[x];
      bool ok = xi != kNone && G.compose(G.identity[G.dom[x]], x) == x
                && G.compose(x, G.identity[G.cod[x]]) == x
                && G.compose(x, xi) == G.identity[G.dom[x]]
                && G.compose(xi, x) == G.identity[G.cod[x]];
      laws.expect(ok, show(x));
      for (MorphismId y : out[G.cod[x]]) {
        MorphismId const xy = G.compose(x, y);
        if (!laws.expect(xy != kNone && G.dom[xy] == G.dom[x] && G.cod[xy] == G.cod[y],
                         show2(x, y))) {
          continue;
        }
        for (MorphismId z : out[G.cod[y]]) {
          MorphismId const yz = G.compose(y, z);
          laws.expect(yz != kNone && G.compose(xy, z) == G.compose(x, yz), show2(x, y));
        }
      }
    }
    laws.into(r);

    Check partial("igroupoid", "order-partial");
    for (MorphismId a = 0; a < m; ++a) {
      partial.expect(G.leq(a, a), show(a));
      for (MorphismId b : down[a]) {
        if (b != a) {
          partial.expect(!G.leq(a, b), show2(b, a));
        }
        for (MorphismId c : down[b]) {
          partial.expect(G.leq(c, a), show2(c, a));
        }
      }
    }
    partial.into(r);

    Check ids("igroupoid", "identity-order");
    for (Vertex e = 0; e < G.objects.size(); ++e) {
      for (Vertex f = 0; f < G.objects.size(); ++f) {
        ids.expect(G.leq(G.identity[e], G.identity[f]) == G.objects.omega(e, f),
                   [&] { return G.objects.label(e) + " / " + G.objects.label(f); });
      }
    }
    ids.into(r);

    Check og1("igroupoid", "OG1"), og2("igroupoid", "OG2");
    for (MorphismId x = 0; x < m; ++x) {
      for (MorphismId u : down[x]) {
        og2.expect(G.leq(G.inverse[u], G.inverse[x]), show2(u, x));
      }
      for (MorphismId y : out[G.cod[x]]) {
        MorphismId const xy = G.compose(x, y);
        for (MorphismId u : down[x]) {
          for (MorphismId v : down[y]) {
            if (G.cod[u] != G.dom[v]) {
              continue;
            }
            MorphismId const uv = G.compose(u, v);
            og1.expect(uv != kNone && xy != kNone && G.leq(uv, xy), show2(x, y));
          }
        }
      }
    }
    og1.into(r);
    og2.into(r);

    Check og3("igroupoid", "OG3"), og3s("igroupoid", "OG3*");
    for (MorphismId x = 0; x < m; ++x) {
      for (Vertex e = 0; e < G.objects.size(); ++e) {
        if (G.leq(G.identity[e], G.identity[G.dom[x]])) {
          std::size_t const n = std::count_if(down[x].begin(), down[x].end(), [&](auto u) {
            return G.dom[u] == e;
          });
          og3.expect(n == 1, [&] {
            return "restriction of " + G.labels[x] + " to " + G.objects.label(e) + " has "
                   + std::to_string(n) + " candidates";
          });
        }
        if (G.leq(G.identity[e], G.identity[G.cod[x]])) {
          std::size_t const n = std::count_if(down[x].begin(), down[x].end(), [&](auto u) {
            return G.cod[u] == e;
          });
          og3s.expect(n == 1, [&] {
            return "corestriction of " + G.labels[x] + " to " + G.objects.label(e)
                   + " has " + std::to_string(n) + " candidates";
          });
        }
      }
    }
    og3.into(r);
    og3s.into(r);
    return r;
  }

  namespace {
    MorphismId chain2(OrderedGroupoid const& G, Vertex a, Vertex b) {
      return G.evaluate_path({a, b});
    }

    MorphismId compose_or_none(OrderedGroupoid const& G, MorphismId a, MorphismId b) {
      if (a == kNone || b == kNone || G.cod[a] != G.dom[b]) {
        return kNone;
      }
      return G.compose(a, b);
    }
  }  // namespace

  Report verify_inductive_axioms(OrderedGroupoid const& G, std::size_t max_vertices) {
    BiorderedSet const& E    = G.objects;
    std::size_t const   n = E.size();
    Report              r;

    auto const chains = enumerate_chains(E, max_vertices);
    std::multimap<Vertex, std::size_t> by_dom;
    std::vector<MorphismId>            value(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) {
      by_dom.emplace(chains[i].dom(), i);
      value[i] = G.evaluate(chains[i]);
    }
    auto chain_text = [&](std::size_t i) {
      return [&E, &chains, i] { return to_string(E, chains[i]); };
    };

    Check functor("igroupoid", "evaluation-functor");
    for (Vertex e = 0; e < n; ++e) {
      functor.expect(G.evaluate(identity_chain(e)) == G.identity[e],
                     [&] { return "identity chain at " + E.label(e); });
    }
    for (std::size_t i = 0; i < chains.size(); ++i) {
      MorphismId const x = value[i];
      if (!functor.expect(x != kNone && G.dom[x] == chains[i].dom()
                              && G.cod[x] == chains[i].cod(),
                          chain_text(i))) {
        continue;
      }
      functor.expect(G.evaluate(invert(chains[i])) == G.inverse[x], chain_text(i));
      for (auto [it, end] = by_dom.equal_range(chains[i].cod()); it != end; ++it) {
        EChain const c = compose(E, chains[i], chains[it->second]);
        functor.expect(G.evaluate(c) == compose_or_none(G, x, value[it->second]),
                       chain_text(i));
      }
    }
    functor.into(r);

    Check order("igroupoid", "evaluation-order");
    for (std::size_t i = 0; i < chains.size(); ++i) {
      if (value[i] == kNone) {
        continue;
      }
      for (Vertex h = 0; h < n; ++h) {
        if (E.omega(h, chains[i].dom())) {
          order.expect(G.evaluate(act(E, h, chains[i])) == G.restrict_to(h, value[i]),
                       chain_text(i));
        }
      }
    }
    order.into(r);

    Check ig1("igroupoid", "IG1"), ig1d("igroupoid", "IG1*");
    for (MorphismId x = 0; x < G.size(); ++x) {
      Vertex const dx = G.dom[x];
      for (Vertex e1 = 0; e1 < n; ++e1) {
        if (!E.omega(e1, dx)) {
          continue;
        }
        MorphismId const u1 = G.restrict_to(e1, x);
        for (Vertex e2 = 0; e2 < n; ++e2) {
          if (!E.omega(e2, dx) || !(E.omega_r(e1, e2) || E.omega_l(e1, e2))) {
            continue;
          }
          MorphismId const u2 = G.restrict_to(e2, x);
          if (u1 == kNone || u2 == kNone) {
            (E.omega_r(e1, e2) ? ig1 : ig1d).fail(G.labels[x] + ": restriction missing");
            continue;
          }
          Vertex const f1 = G.cod[u1], f2 = G.cod[u2];
          auto         witness = [&] {
            return G.labels[x] + " with " + E.label(e1) + ", " + E.label(e2);
          };
          if (E.omega_r(e1, e2)) {
            if (!ig1.expect(E.omega_r(f1, f2), witness)) {
              continue;
            }
            Vertex const     e12 = E.product(e1, e2);
            Vertex const     f12 = E.product(f1, f2);
            MorphismId const lhs
                = compose_or_none(G, chain2(G, e1, e12), G.restrict_to(e12, x));
            MorphismId const rhs = compose_or_none(G, u1, chain2(G, f1, f12));
            ig1.expect(lhs != kNone && lhs == rhs, witness);
          }
          if (E.omega_l(e1, e2)) {
            if (!ig1d.expect(E.omega_l(f1, f2), witness)) {
              continue;
            }
            Vertex const     e21 = E.product(e2, e1);
            Vertex const     f21 = E.product(f2, f1);
            MorphismId const lhs
                = compose_or_none(G, chain2(G, e1, e21), G.restrict_to(e21, x));
            MorphismId const rhs = compose_or_none(G, u1, chain2(G, f1, f21));
            ig1d.expect(lhs != kNone && lhs == rhs, witness);
          }
        }
      }
    }
    ig1.into(r);
    ig1d.into(r);

    Check ig2("igroupoid", "IG2");
    for (auto const& sq : singular_squares(E)) {
      MorphismId const top = compose_or_none(G, chain2(G, sq.e, sq.f), chain2(G, sq.f, sq.h));
      MorphismId const bottom
          = compose_or_none(G, chain2(G, sq.e, sq.g), chain2(G, sq.g, sq.h));
      ig2.expect(top != kNone && top == bottom, [&] {
        return "[[" + E.label(sq.e) + ", " + E.label(sq.f) + "], [" + E.label(sq.g) + ", "
               + E.label(sq.h) + "]]";
      });
    }
    ig2.into(r);
    return r;
  }

  namespace {
    bool p_related(OrderedGroupoid const& G, MorphismId x, MorphismId y) {
      BiorderedSet const& E = G.objects;
      if (!E.R(G.dom[x], G.dom[y]) || !E.L(G.cod[x], G.cod[y])) {
        return false;
      }
      MorphismId const lhs = compose_or_none(G, x, chain2(G, G.cod[x], G.cod[y]));
      MorphismId const rhs = compose_or_none(G, chain2(G, G.dom[x], G.dom[y]), y);
      return lhs != kNone && lhs == rhs;
    }
  }  // namespace

  PClasses p_classes(OrderedGroupoid const& G) {
    std::size_t const m = G.size();
    std::vector<bool> rel(m * m);
    for (MorphismId x = 0; x < m; ++x) {
      for (MorphismId y = 0; y < m; ++y) {
        rel[x * m + y] = p_related(G, x, y);
      }
    }
    PClasses P;
    Check    eq("igroupoid", "p-equivalence");
    for (MorphismId x = 0; x < m; ++x) {
      eq.expect(rel[x * m + x], [&] { return "not reflexive at " + G.labels[x]; });
      for (MorphismId y = 0; y < m; ++y) {
        if (!rel[x * m + y]) {
          continue;
        }
        eq.expect(rel[y * m + x], [&] {
          return "not symmetric at " + G.labels[x] + ", " + G.labels[y];
        });
        for (MorphismId z = 0; z < m; ++z) {
          if (rel[y * m + z]) {
            eq.expect(rel[x * m + z], [&] {
              return "not transitive at " + G.labels[x] + ", " + G.labels[y] + ", "
                     + G.labels[z];
            });
          }
        }
      }
    }
    eq.into(P.report);
    P.class_of.assign(m, kNone);
    for (MorphismId x = 0; x < m; ++x) {
      for (std::size_t c = 0; c < P.representatives.size(); ++c) {
        if (rel[x * m + P.representatives[c]]) {
          P.class_of[x] = static_cast<MorphismId>(c);
          break;
        }
      }
      if (P.class_of[x] == kNone) {
        P.class_of[x] = static_cast<MorphismId>(P.representatives.size());
        P.representatives.push_back(x);
      }
    }
    return P;
  }

  MorphismId pseudo_product_rep(OrderedGroupoid const& G,
                                MorphismId             x,
                                MorphismId             y,
                                Vertex                 h) {
    BiorderedSet const& E  = G.objects;
    Vertex const        rx = G.cod[x];
    Vertex const        dy = G.dom[y];
    if (!E.omega_l(h, rx) || !E.omega_r(h, dy)) {
      throw Error(ErrorKind::NotBelow, E.label(h) + " is not in M(" + E.label(rx) + ", "
                                           + E.label(dy) + ")");
    }
    Vertex const     rxh = E.product(rx, h);
    Vertex const     hdy = E.product(h, dy);
    MorphismId       acc = G.corestrict_to(x, rxh);
    acc                  = compose_or_none(G, acc, chain2(G, rxh, h));
    acc                  = compose_or_none(G, acc, chain2(G, h, hdy));
    acc                  = compose_or_none(G, acc, G.restrict_to(hdy, y));
    return acc;
  }

  std::size_t pseudo_product(OrderedGroupoid const& G,
                             PClasses const&        P,
                             std::size_t            X,
                             std::size_t            Y) {
    MorphismId const x = P.representatives.at(X);
    MorphismId const y = P.representatives.at(Y);
    auto const       S = sandwich_set(G.objects, G.cod[x], G.dom[y]);
    MorphismId const z = pseudo_product_rep(G, x, y, S.front());
    if (z == kNone) {
      throw Error(ErrorKind::NotComposable, "pseudo-product of " + G.labels[x] + " and "
                                                + G.labels[y] + " is undefined");
    }
    return P.class_of[z];
  }

  Report verify_pseudo_product(OrderedGroupoid const& G, PClasses const& P) {
    Report            r;
    Check             inv("igroupoid", "pseudo-product-invariance");
    std::size_t const k = P.representatives.size();
    for (std::size_t X = 0; X < k; ++X) {
      for (std::size_t Y = 0; Y < k; ++Y) {
        std::size_t expected = kNone;
        for (MorphismId x = 0; x < G.size(); ++x) {
          if (P.class_of[x] != X) {
            continue;
          }
          for (MorphismId y = 0; y < G.size(); ++y) {
            if (P.class_of[y] != Y) {
              continue;
            }
            std::vector<Vertex> hs;
            try {
              hs = sandwich_set(G.objects, G.cod[x], G.dom[y]);
            } catch (Error const&) {
              inv.fail("empty sandwich for " + G.labels[x] + ", " + G.labels[y]);
              continue;
            }
            for (Vertex h : hs) {
              MorphismId const  z = pseudo_product_rep(G, x, y, h);
              std::size_t const c = z == kNone ? kNone : P.class_of[z];
              if (expected == kNone) {
                expected = c;
              }
              inv.expect(c != kNone && c == expected, [&] {
                return G.labels[x] + " . " + G.labels[y] + " via " + G.objects.label(h);
              });
            }
          }
        }
      }
    }
    inv.into(r);
    return r;
  }

  FiniteSemigroup reconstruct_semigroup(OrderedGroupoid const&   G,
                                        PClasses const&          P,
                                        std::vector<std::string> labels) {
    std::size_t const                 k = P.representatives.size();
    std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
    for (std::size_t X = 0; X < k; ++X) {
      for (std::size_t Y = 0; Y < k; ++Y) {
        table[X][Y] = static_cast<Element>(pseudo_product(G, P, X, Y));
      }
    }
    return from_cayley(table, "pseudo-product", std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // G(S)
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Evaluator {
      FiniteSemigroup                  S;
      std::vector<Element>             vertex_element;
      std::map<IGMorphism, MorphismId> index;

      MorphismId operator()(EChain const& c) const {
        Element w = vertex_element[c.vertices.front()];
        Element v = w;
        for (std::size_t i = 1; i < c.length(); ++i) {
          w = S.product(w, vertex_element[c.vertices[i]]);
          v = S.product(vertex_element[c.vertices[i]], v);
        }
        auto it = index.find(IGMorphism{w, v});
        return it == index.end() ? kNone : it->second;
      }
    };

    std::string show(FiniteSemigroup const& S, IGMorphism m) {
      return "(" + S.label(m.x) + ", " + S.label(m.x_prime) + ")";
    }
  }  // namespace

  InductiveGroupoid::InductiveGroupoid(FiniteSemigroup S)
      : S_(std::move(S)), green_(regsg::green(S_)) {
    groupoid_.objects = build_biorder(S_);
    for (Element x = 0; x < S_.order(); ++x) {
      for (Element y : green_.inverses[x]) {
        index_.emplace(IGMorphism{x, y}, morphisms_.size());
        morphisms_.push_back({x, y});
      }
    }
    std::size_t const m  = morphisms_.size();
    OrderedGroupoid&  G  = groupoid_;
    auto              vx = [&](Element e) { return *G.objects.vertex_of(e); };
    for (auto const& mor : morphisms_) {
      G.dom.push_back(vx(domain(mor)));
      G.cod.push_back(vx(codomain(mor)));
      G.inverse.push_back(index_.at({mor.x_prime, mor.x}));
      G.labels.push_back(show(S_, mor));
    }
    for (Vertex e = 0; e < G.objects.size(); ++e) {
      Element const x = G.objects.element(e);
      G.identity.push_back(index_.at({x, x}));
    }
    G.product.assign(m * m, kNone);
    G.order.assign(m * m, false);
    for (MorphismId a = 0; a < m; ++a) {
      for (MorphismId b = 0; b < m; ++b) {
        IGMorphism const& p = morphisms_[a];
        IGMorphism const& q = morphisms_[b];
        if (codomain(p) == domain(q)) {
          G.product[a * m + b]
              = index_.at({S_.product(p.x, q.x), S_.product(q.x_prime, p.x_prime)});
        }
        G.order[a * m + b] = leq(p, q);
      }
    }
    G.evaluate = Evaluator{S_, G.objects.elements(), index_};
  }

  std::optional<MorphismId> InductiveGroupoid::find(IGMorphism m) const {
    auto it = index_.find(m);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  IGMorphism InductiveGroupoid::restrict(Element e, IGMorphism m) const {
    Element const d = domain(m);
    if (!S_.is_idempotent(e) || S_.product(e, d) != e || S_.product(d, e) != e) {
      throw Error(ErrorKind::NotBelow, S_.label(e) + " is not below " + S_.label(d));
    }
    return {S_.product(e, m.x), S_.product(m.x_prime, e)};
  }

  IGMorphism InductiveGroupoid::corestrict(IGMorphism m, Element f) const {
    Element const r = codomain(m);
    if (!S_.is_idempotent(f) || S_.product(f, r) != f || S_.product(r, f) != f) {
      throw Error(ErrorKind::NotBelow, S_.label(f) + " is not below " + S_.label(r));
    }
    return {S_.product(m.x, f), S_.product(f, m.x_prime)};
  }

  IGMorphism InductiveGroupoid::evaluate(EChain const& c) const {
    MorphismId const id = groupoid_.evaluate(c);
    if (id == kNone) {
      throw Error(ErrorKind::NotAnEPath, to_string(biorder(), c));
    }
    return morphisms_[id];
  }

  bool InductiveGroupoid::leq(IGMorphism a, IGMorphism b) const {
    Element const e = domain(a);
    Element const f = domain(b);
    return a.x == S_.product(e, b.x) && a.x_prime == S_.product(b.x_prime, e)
           && S_.product(e, f) == e && S_.product(f, e) == e;
  }

  std::vector<std::string> InductiveGroupoid::class_labels(PClasses const& P) const {
    std::vector<std::string> out;
    for (MorphismId rep : P.representatives) {
      out.push_back(S_.label(morphisms_[rep].x));
    }
    return out;
  }

  InductiveGroupoid build_IG(FiniteSemigroup const& S) {
    return InductiveGroupoid(S);
  }

}  // namespace regsg
