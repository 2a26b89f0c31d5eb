#include "regsg/cross_connection.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "regsg/error.hpp"

namespace regsg {

  namespace {
    // The idempotent cone with apex c inside H(g; c) whose own H-functor is
    // H(g; -). Any such cone e satisfies e = e * 1 and so lies in H(g; c).
    NormalCone find_linked_cone(FiniteCategory const& C, HFunctor const& h, ObjectId c) {
      for (NormalCone const& e : h.values[c]) {
        if (e.apex == c && is_idempotent_cone(C, e) && h_functor(C, e) == h) {
          return e;
        }
      }
      return NormalCone{c, {}};
    }

    std::vector<NormalCone> idempotent_cones(FiniteCategory const& C) {
      auto all = enumerate_normal_cones(C);
      all.erase(std::remove_if(all.begin(), all.end(), [&](auto const& g) {
                  return !is_idempotent_cone(C, g);
                }),
                all.end());
      return all;
    }

    std::vector<HFunctor> distinct_functors(FiniteCategory const& C,
                                            std::vector<NormalCone> const& cones) {
      std::vector<HFunctor> out;
      for (auto const& g : cones) {
        out.push_back(h_functor(C, g));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }  // namespace

  CrossConnection::CrossConnection(FiniteCategory          C,
                                   FiniteCategory          D,
                                   std::vector<NormalCone> gamma,
                                   std::vector<MorphismId> gamma_mor,
                                   std::vector<NormalCone> delta,
                                   std::vector<MorphismId> delta_mor)
      : C_(std::move(C)),
        D_(std::move(D)),
        gamma_(std::move(gamma)),
        gamma_mor_(std::move(gamma_mor)),
        delta_(std::move(delta)),
        delta_mor_(std::move(delta_mor)) {
    if (gamma_.size() != D_.object_count() || gamma_mor_.size() != D_.morphism_count()
        || delta_.size() != C_.object_count() || delta_mor_.size() != C_.morphism_count()) {
      throw Error(ErrorKind::BadIndex, "cross-connection data has the wrong size");
    }
    for (auto const& g : gamma_) {
      gamma_h_.push_back(h_functor(C_, g));
    }
    for (auto const& d : delta_) {
      delta_h_.push_back(h_functor(D_, d));
    }
    for (ObjectId d = 0; d < D_.object_count(); ++d) {
      for (ObjectId c : m_set_of_cone(C_, gamma_[d])) {
        linked_.emplace_back(c, d);
      }
    }
    std::sort(linked_.begin(), linked_.end());
    for (auto [c, d] : linked_) {
      gamma_cone_.push_back(find_linked_cone(C_, gamma_h_[d], c));
      delta_cone_.push_back(find_linked_cone(D_, delta_h_[c], d));
    }
    if (C_.object_count() <= 12 && D_.object_count() <= 12) {
      enumerated_ = true;
      cones_C_    = idempotent_cones(C_);
      cones_D_    = idempotent_cones(D_);
      dual_C_     = distinct_functors(C_, cones_C_);
      dual_D_     = distinct_functors(D_, cones_D_);
    }
  }

  NatTrans CrossConnection::gamma_transform(MorphismId g) const {
    ObjectId const d1 = D_.dom(g), d2 = D_.cod(g);
    return yoneda_transform(C_, gamma_[d1], gamma_h_[d1], gamma_[d2], gamma_h_[d2], gamma_mor_[g]);
  }

  NatTrans CrossConnection::delta_transform(MorphismId f) const {
    ObjectId const c1 = C_.dom(f), c2 = C_.cod(f);
    return yoneda_transform(D_, delta_[c1], delta_h_[c1], delta_[c2], delta_h_[c2], delta_mor_[f]);
  }

  bool CrossConnection::is_linked(ObjectId c, ObjectId d) const {
    return std::binary_search(linked_.begin(), linked_.end(), LinkedObjects{c, d});
  }

  std::size_t CrossConnection::linked_index(ObjectId c, ObjectId d) const {
    auto it = std::lower_bound(linked_.begin(), linked_.end(), LinkedObjects{c, d});
    if (it == linked_.end() || *it != LinkedObjects{c, d}) {
      throw Error(ErrorKind::NotConnected,
                  "(" + C_.label(c) + ", " + D_.label(d) + ") is not a linked pair");
    }
    return static_cast<std::size_t>(it - linked_.begin());
  }

  NormalCone const& CrossConnection::gamma_cone(ObjectId c, ObjectId d) const {
    NormalCone const& g = gamma_cone_[linked_index(c, d)];
    if (g.components.empty()) {
      throw Error(ErrorKind::NotConnected, "no idempotent cone at " + C_.label(c));
    }
    return g;
  }

  NormalCone const& CrossConnection::delta_cone(ObjectId c, ObjectId d) const {
    NormalCone const& g = delta_cone_[linked_index(c, d)];
    if (g.components.empty()) {
      throw Error(ErrorKind::NotConnected, "no idempotent cone at " + D_.label(d));
    }
    return g;
  }

  std::vector<MorphismId> transposes(CrossConnection const& X, LinkedObjects from, LinkedObjects to) {
    auto const [c, d]   = from;
    auto const [c2, d2] = to;
    FiniteCategory const& D  = X.D();
    NormalCone const&     s1 = X.delta_cone(c, d);
    NormalCone const&     s2 = X.delta_cone(c2, d2);
    std::map<NatTrans, MorphismId> by_transform;
    for (MorphismId g : D.hom(d2, d)) {
      by_transform.emplace(
          yoneda_transform(D, s1, X.delta_functor(c), s2, X.delta_functor(c2), g), g);
    }
    std::vector<MorphismId> out;
    for (MorphismId f : X.C().hom(c, c2)) {
      auto it = by_transform.find(X.delta_transform(f));
      out.push_back(it == by_transform.end() ? kNone : it->second);
    }
    return out;
  }

  MorphismId transpose(CrossConnection const& X,
                       MorphismId             f,
                       LinkedObjects          from,
                       LinkedObjects          to) {
    FiniteCategory const& C = X.C();
    if (C.dom(f) != from.first || C.cod(f) != to.first) {
      throw Error(ErrorKind::NotComposable, C.to_string(f) + " does not join the linked pairs");
    }
    auto const& hom = C.hom(from.first, to.first);
    auto const  pos = std::find(hom.begin(), hom.end(), f) - hom.begin();
    MorphismId  g   = transposes(X, from, to)[pos];
    if (g == kNone) {
      throw Error(ErrorKind::NotConnected, "no transpose for " + C.to_string(f));
    }
    return g;
  }

  namespace {
    // One direction of the cross-connection: objects of `source` are sent to
    // H-functors on `target`.
    struct Side {
      std::string                    name;
      FiniteCategory const&          source;
      FiniteCategory const&          target;
      std::vector<NormalCone> const& cones;
      std::vector<HFunctor> const&   functors;
      std::vector<HFunctor> const&   dual_objects;
      bool                           enumerated;
      std::function<MorphismId(MorphismId)> representing;
      std::function<NatTrans(MorphismId)>   transform;
    };

    void verify_side(Side const& s, std::string const& suite, Report& r) {
      FiniteCategory const& S = s.source;
      FiniteCategory const& T = s.target;

      Check cones(suite, s.name + "-cones");
      for (ObjectId d = 0; d < S.object_count(); ++d) {
        NormalCone const& g = s.cones[d];
        cones.expect(is_normal_cone(T, g) && is_idempotent_cone(T, g),
                     [&] { return "cone of " + S.label(d) + " is not an idempotent normal cone"; });
        if (s.enumerated) {
          cones.expect(std::binary_search(s.dual_objects.begin(), s.dual_objects.end(), s.functors[d]),
                       [&] { return "functor of " + S.label(d) + " is unknown"; });
        }
      }
      cones.into(r);
      if (!cones.ok()) {
        return;
      }

      Check functor(suite, s.name + "-functor");
      std::vector<NatTrans> image(S.morphism_count());
      for (MorphismId g = 0; g < S.morphism_count(); ++g) {
        MorphismId const m = s.representing(g);
        bool const ends = m < T.morphism_count() && T.dom(m) == s.cones[S.cod(g)].apex
                          && T.cod(m) == s.cones[S.dom(g)].apex;
        if (!functor.expect(ends, [&] { return "image of " + S.to_string(g) + " has the wrong ends"; })) {
          continue;
        }
        image[g] = s.transform(g);
      }
      if (functor.ok()) {
        for (ObjectId d = 0; d < S.object_count(); ++d) {
          functor.expect(image[S.identity(d)] == identity_transform(s.functors[d]),
                         [&] { return "identity at " + S.label(d); });
        }
        for (MorphismId f = 0; f < S.morphism_count(); ++f) {
          for (MorphismId g : S.out(S.cod(f))) {
            functor.expect(image[S.compose(f, g)] == compose(image[f], image[g]), [&] {
              return S.to_string(f) + " then " + S.to_string(g);
            });
          }
        }
      }
      functor.into(r);
      if (!functor.ok()) {
        return;
      }

      Check incl(suite, s.name + "-inclusion-preserving");
      for (ObjectId a = 0; a < S.object_count(); ++a) {
        for (ObjectId b = 0; b < S.object_count(); ++b) {
          if (S.is_subobject(a, b)) {
            MorphismId const j = S.inclusion(a, b);
            incl.expect(is_subfunctor(s.functors[a], s.functors[b])
                            && is_inclusion_transform(s.functors[a], s.functors[b], image[j]),
                        [&] { return S.to_string(j); });
          }
        }
      }
      incl.into(r);

      Check ff(suite, s.name + "-fully-faithful");
      for (ObjectId a = 0; a < S.object_count(); ++a) {
        for (ObjectId b = 0; b < S.object_count(); ++b) {
          NormalCone const& ga = s.cones[a];
          NormalCone const& gb = s.cones[b];
          std::set<NatTrans> all;
          for (MorphismId m : T.hom(gb.apex, ga.apex)) {
            all.insert(yoneda_transform(T, ga, s.functors[a], gb, s.functors[b], m));
          }
          std::set<NatTrans> hit;
          for (MorphismId g : S.hom(a, b)) {
            hit.insert(image[g]);
          }
          auto where = [&] { return S.label(a) + " -> " + S.label(b); };
          ff.expect(all.size() == T.hom(gb.apex, ga.apex).size(), where);
          ff.expect(hit.size() == S.hom(a, b).size() && hit == all, where);
        }
      }
      ff.into(r);

      Check ideals(suite, s.name + "-ideals");
      if (!s.enumerated) {
        ideals.skip("cone enumeration disabled for large categories");
      } else {
        for (ObjectId d = 0; d < S.object_count(); ++d) {
          std::set<HFunctor> below_image;
          std::size_t        below = 0;
          for (ObjectId a = 0; a < S.object_count(); ++a) {
            if (!S.is_subobject(a, d)) {
              continue;
            }
            ++below;
            below_image.insert(s.functors[a]);
            for (ObjectId b = 0; b < S.object_count(); ++b) {
              if (S.is_subobject(b, d)) {
                ideals.expect(S.is_subobject(a, b) == is_subfunctor(s.functors[a], s.functors[b]),
                              [&] { return "order in the ideal of " + S.label(d); });
              }
            }
          }
          std::set<HFunctor> target;
          for (auto const& h : s.dual_objects) {
            if (is_subfunctor(h, s.functors[d])) {
              target.insert(h);
            }
          }
          ideals.expect(below_image.size() == below && below_image == target,
                        [&] { return "ideal of " + S.label(d) + " is not mapped onto"; });
        }
      }
      ideals.into(r);

      Check cxn(suite, s.name + "-connection");
      for (ObjectId c = 0; c < T.object_count(); ++c) {
        bool found = false;
        for (ObjectId d = 0; d < S.object_count() && !found; ++d) {
          found = T.is_iso(s.cones[d](c));
        }
        cxn.expect(found, [&] { return T.label(c) + " lies in no M-set"; });
      }
      cxn.into(r);
    }
  }  // namespace

  Report verify_cross_connection(CrossConnection const& X, std::string const& suite) {
    FiniteCategory const& C = X.C();
    FiniteCategory const& D = X.D();
    Report                r;

    std::vector<NormalCone> gammas, deltas;
    std::vector<HFunctor>   gh, dh;
    for (ObjectId d = 0; d < D.object_count(); ++d) {
      gammas.push_back(X.gamma(d));
      gh.push_back(X.gamma_functor(d));
    }
    for (ObjectId c = 0; c < C.object_count(); ++c) {
      deltas.push_back(X.delta(c));
      dh.push_back(X.delta_functor(c));
    }
    verify_side(Side{"gamma", D, C, gammas, gh, X.dual_objects_C(), X.cones_enumerated(),
                     [&](MorphismId g) { return X.gamma_mor(g); },
                     [&](MorphismId g) { return X.gamma_transform(g); }},
                suite, r);
    verify_side(Side{"delta", C, D, deltas, dh, X.dual_objects_D(), X.cones_enumerated(),
                     [&](MorphismId f) { return X.delta_mor(f); },
                     [&](MorphismId f) { return X.delta_transform(f); }},
                suite, r);
    if (!r.ok()) {
      return r;
    }

    Check dual(suite, "linked-duality");
    std::vector<LinkedObjects> other;
    for (ObjectId c = 0; c < C.object_count(); ++c) {
      for (ObjectId d : m_set_of_cone(D, X.delta(c))) {
        other.emplace_back(c, d);
      }
    }
    std::sort(other.begin(), other.end());
    dual.expect(other == X.linked(), [&] {
      return std::to_string(X.linked().size()) + " linked pairs against "
             + std::to_string(other.size()) + " from the dual";
    });
    dual.into(r);

    Check cones(suite, "linked-cones");
    for (auto [c, d] : X.linked()) {
      auto where = [&, c = c, d = d] { return "(" + C.label(c) + ", " + D.label(d) + ")"; };
      try {
        NormalCone const& g = X.gamma_cone(c, d);
        NormalCone const& s = X.delta_cone(c, d);
        cones.expect(is_normal_cone(C, g) && is_normal_cone(D, s), where);
        cones.expect(h_functor(C, g) == X.gamma_functor(d) && h_functor(D, s) == X.delta_functor(c),
                     where);
      } catch (Error const&) {
        cones.fail(where());
      }
    }
    if (X.cones_enumerated()) {
      // Idempotent cones with equal H-functors have equal M-sets, and each
      // linked pair has exactly one cone.
      std::map<HFunctor, std::vector<ObjectId>> msets;
      for (auto const& g : X.idempotent_cones_C()) {
        auto [it, fresh] = msets.emplace(h_functor(C, g), m_set_of_cone(C, g));
        cones.expect(fresh || it->second == m_set_of_cone(C, g),
                     [&] { return "M-sets differ for " + to_string(C, g); });
      }
      for (auto [c, d] : X.linked()) {
        std::size_t count = 0;
        for (auto const& g : X.idempotent_cones_C()) {
          count += g.apex == c && h_functor(C, g) == X.gamma_functor(d);
        }
        cones.expect(count == 1, [&, c = c] { return "cone at " + C.label(c) + " is not unique"; });
      }
    }
    cones.into(r);
    if (!cones.ok()) {
      return r;
    }

    Check tr(suite, "transposes");
    for (auto const& p : X.linked()) {
      for (auto const& q : X.linked()) {
        auto const t = transposes(X, p, q);
        std::set<MorphismId> distinct(t.begin(), t.end());
        tr.expect(!distinct.count(kNone) && distinct.size() == t.size()
                      && t.size() == D.hom(q.second, p.second).size(),
                  [&] {
                    return "(" + C.label(p.first) + ", " + D.label(p.second) + ") to (" + C.label(q.first)
                           + ", " + D.label(q.second) + ")";
                  });
      }
    }
    tr.into(r);
    return r;
  }

  LinkedPairSemigroup linked_pair_semigroup(CrossConnection const&                              X,
                                            std::vector<std::pair<NormalCone, NormalCone>> const& pairs,
                                            std::string name) {
    LinkedPairSemigroup out;
    for (auto const& p : pairs) {
      auto it = std::find(out.elements.begin(), out.elements.end(), p);
      if (it == out.elements.end()) {
        out.source.push_back(static_cast<Element>(out.elements.size()));
        out.elements.push_back(p);
      } else {
        out.source.push_back(static_cast<Element>(it - out.elements.begin()));
      }
    }
    std::size_t const                 n = out.elements.size();
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto const& [g1, d1] = out.elements[a];
        auto const& [g2, d2] = out.elements[b];
        std::pair<NormalCone, NormalCone> const prod{cone_compose(X.C(), g1, g2),
                                                     cone_compose(X.D(), d2, d1)};
        auto it = std::find(out.elements.begin(), out.elements.end(), prod);
        if (it == out.elements.end()) {
          throw Error(ErrorKind::NotComposable, "product of cone pairs " + std::to_string(a) + " and "
                                                    + std::to_string(b) + " is not in the set");
        }
        table[a][b] = static_cast<Element>(it - out.elements.begin());
      }
    }
    out.semigroup = from_cayley(table, std::move(name));
    return out;
  }

  BiorderedSet biorder_of_linked_pairs(CrossConnection const& X) {
    auto const&       E = X.linked();
    std::size_t const n = E.size();
    std::vector<bool> wl(n * n), wr(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        wl[i * n + j] = X.C().is_subobject(E[i].first, E[j].first);
        wr[i * n + j] = X.D().is_subobject(E[i].second, E[j].second);
      }
    }
    std::vector<Vertex> prod(n * n, BiorderedSet::kUndefined);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(wl[i * n + j] || wr[i * n + j] || wl[j * n + i] || wr[j * n + i])) {
          continue;
        }
        auto [c1, d1]      = E[i];
        auto [c2, d2]      = E[j];
        NormalCone const g = cone_compose(X.C(), X.gamma_cone(c1, d1), X.gamma_cone(c2, d2));
        NormalCone const s = cone_compose(X.D(), X.delta_cone(c2, d2), X.delta_cone(c1, d1));
        prod[i * n + j]    = static_cast<Vertex>(X.linked_index(g.apex, s.apex));
      }
    }
    std::vector<std::string> labels;
    for (auto [c, d] : E) {
      labels.push_back("(" + X.C().label(c) + ", " + X.D().label(d) + ")");
    }
    return BiorderedSet(std::move(labels), std::move(wl), std::move(wr), std::move(prod));
  }

}  // namespace regsg
