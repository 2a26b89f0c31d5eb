#include "regsg/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "regsg/error.hpp"

namespace regsg {

  FiniteCategory::FiniteCategory(std::vector<std::string> object_labels,
                                 std::vector<CatMorphism> morphisms,
                                 Composer const&          compose,
                                 std::vector<CatMorphism> inclusions)
      : labels_(std::move(object_labels)), morphisms_(std::move(morphisms)) {
    std::size_t const n = labels_.size();
    hom_.assign(n * n, {});
    out_.assign(n, {});
    std::vector<std::vector<MorphismId>> in(n);
    for (MorphismId f = 0; f < morphisms_.size(); ++f) {
      CatMorphism const& m = morphisms_[f];
      if (m.dom >= n || m.cod >= n) {
        throw Error(ErrorKind::BadIndex, "morphism with an unknown object");
      }
      if (!index_.emplace(m, f).second) {
        throw Error(ErrorKind::BadIndex, "duplicate morphism");
      }
      hom_[m.dom * n + m.cod].push_back(f);
      out_pos_.push_back(static_cast<std::uint32_t>(out_[m.dom].size()));
      out_[m.dom].push_back(f);
      in[m.cod].push_back(f);
    }
    compose_.resize(morphisms_.size());
    for (MorphismId f = 0; f < morphisms_.size(); ++f) {
      CatMorphism const& a = morphisms_[f];
      for (MorphismId g : out_[a.cod]) {
        CatMorphism const& b = morphisms_[g];
        CatMorphism const  c{a.dom, compose(a, b), b.cod};
        auto               it = index_.find(c);
        if (it == index_.end()) {
          throw Error(ErrorKind::NotComposable,
                      "composite of " + to_string(f) + " and " + to_string(g) + " is missing");
        }
        compose_[f].push_back(it->second);
      }
    }
    identity_.assign(n, kNone);
    for (ObjectId a = 0; a < n; ++a) {
      for (MorphismId i : hom(a, a)) {
        bool ok = true;
        for (MorphismId g : out_[a]) {
          ok = ok && this->compose(i, g) == g;
        }
        for (MorphismId h : in[a]) {
          ok = ok && this->compose(h, i) == h;
        }
        if (ok) {
          identity_[a] = i;
          break;
        }
      }
      if (identity_[a] == kNone) {
        throw Error(ErrorKind::BadIndex, "object " + labels_[a] + " has no identity");
      }
    }
    inclusion_.assign(n * n, kNone);
    for (ObjectId a = 0; a < n; ++a) {
      inclusion_[a * n + a] = identity_[a];
    }
    for (auto const& m : inclusions) {
      auto f = find(m);
      if (!f) {
        throw Error(ErrorKind::BadIndex, "inclusion is not a morphism");
      }
      inclusion_[m.dom * n + m.cod] = *f;
    }
    classify();
  }

  std::optional<MorphismId> FiniteCategory::find(CatMorphism const& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  MorphismId FiniteCategory::compose(MorphismId f, MorphismId g) const {
    if (f >= morphism_count() || g >= morphism_count() || cod(f) != dom(g)) {
      throw Error(ErrorKind::NotComposable,
                  (f < morphism_count() ? to_string(f) : "?") + " then "
                      + (g < morphism_count() ? to_string(g) : "?"));
    }
    return compose_[f][out_pos_[g]];
  }

  MorphismId FiniteCategory::compose(std::initializer_list<MorphismId> fs) const {
    auto       it  = fs.begin();
    MorphismId acc = *it++;
    for (; it != fs.end(); ++it) {
      acc = compose(acc, *it);
    }
    return acc;
  }

  bool FiniteCategory::is_retraction(MorphismId f) const {
    MorphismId const j = inclusion(cod(f), dom(f));
    return j != kNone && compose(j, f) == identity(cod(f));
  }

  std::string FiniteCategory::to_string(MorphismId f) const {
    CatMorphism const& m = morphisms_.at(f);
    std::string const  carrier
        = m.carrier < carrier_labels_.size() ? carrier_labels_[m.carrier] : std::to_string(m.carrier);
    return labels_[m.dom] + " -[" + carrier + "]-> " + labels_[m.cod];
  }

  void FiniteCategory::classify() {
    std::size_t const n = object_count();
    std::size_t const m = morphism_count();
    iso_inverse_.assign(m, kNone);
    epi_.assign(m, true);
    mono_.assign(m, true);
    for (MorphismId f = 0; f < m; ++f) {
      ObjectId const a = dom(f), b = cod(f);
      for (MorphismId g : hom(b, a)) {
        if (compose(f, g) == identity(a) && compose(g, f) == identity(b)) {
          iso_inverse_[f] = g;
          break;
        }
      }
      for (ObjectId e = 0; e < n && epi_[f]; ++e) {
        std::set<MorphismId> seen;
        for (MorphismId h : hom(b, e)) {
          if (!seen.insert(compose(f, h)).second) {
            epi_[f] = false;
            break;
          }
        }
      }
      for (ObjectId x = 0; x < n && mono_[f]; ++x) {
        std::set<MorphismId> seen;
        for (MorphismId h : hom(x, a)) {
          if (!seen.insert(compose(h, f)).second) {
            mono_[f] = false;
            break;
          }
        }
      }
    }
    factorization_.assign(m, std::nullopt);
    for (MorphismId f = 0; f < m; ++f) {
      ObjectId const c = dom(f), d = cod(f);
      for (ObjectId c1 = 0; c1 < n && !factorization_[f]; ++c1) {
        if (!is_subobject(c1, c)) {
          continue;
        }
        MorphismId const j1 = inclusion(c1, c);
        for (MorphismId q : hom(c, c1)) {
          if (factorization_[f] || compose(j1, q) != identity(c1)) {
            continue;
          }
          for (ObjectId d1 = 0; d1 < n && !factorization_[f]; ++d1) {
            if (!is_subobject(d1, d)) {
              continue;
            }
            MorphismId const j2 = inclusion(d1, d);
            for (MorphismId u : hom(c1, d1)) {
              if (!is_iso(u)) {
                continue;
              }
              MorphismId const qu = compose(q, u);
              if (compose(qu, j2) == f) {
                factorization_[f] = Factorization{q, u, j2, qu, d1};
                break;
              }
            }
          }
        }
      }
    }
  }

  MorphismClass classify(FiniteCategory const& C, MorphismId f) {
    MorphismClass k;
    k.iso        = C.is_iso(f);
    k.epi        = C.is_epi(f);
    k.mono       = C.is_mono(f);
    k.inclusion  = C.is_inclusion(f);
    k.retraction = C.is_retraction(f);
    return k;
  }

  Factorization normal_factorize(FiniteCategory const& C, MorphismId f) {
    auto const& fac = C.factorization(f);
    if (!fac) {
      throw Error(ErrorKind::NoFactorization, C.to_string(f));
    }
    return *fac;
  }

  Report verify_cone(FiniteCategory const& C, NormalCone const& gamma) {
    Report r;
    Check  c1("category", "Ncone1"), c2("category", "Ncone2"), c3("category", "Ncone3");
    auto   text = [&] { return to_string(C, gamma); };
    if (!c1.expect(gamma.components.size() == C.object_count() && gamma.apex < C.object_count(),
                   text)) {
      c1.into(r);
      return r;
    }
    for (ObjectId c = 0; c < C.object_count(); ++c) {
      MorphismId const g = gamma(c);
      c1.expect(g < C.morphism_count() && C.dom(g) == c && C.cod(g) == gamma.apex, text);
    }
    c1.into(r);
    if (!c1.ok()) {
      return r;
    }
    bool iso = false;
    for (ObjectId c = 0; c < C.object_count(); ++c) {
      iso = iso || C.is_iso(gamma(c));
      for (ObjectId d = 0; d < C.object_count(); ++d) {
        if (c != d && C.is_subobject(c, d)) {
          c2.expect(C.compose(C.inclusion(c, d), gamma(d)) == gamma(c), text);
        }
      }
    }
    c3.expect(iso, text);
    c2.into(r);
    c3.into(r);
    return r;
  }

  bool is_normal_cone(FiniteCategory const& C, NormalCone const& gamma) {
    return verify_cone(C, gamma).ok();
  }

  bool is_idempotent_cone(FiniteCategory const& C, NormalCone const& gamma) {
    return gamma(gamma.apex) == C.identity(gamma.apex);
  }

  NormalCone cone_star(FiniteCategory const& C, NormalCone const& gamma, MorphismId f) {
    if (C.dom(f) != gamma.apex) {
      throw Error(ErrorKind::NotComposable, C.to_string(f) + " does not start at the apex");
    }
    if (!C.is_epi(f)) {
      throw Error(ErrorKind::NotEpi, C.to_string(f));
    }
    NormalCone out{C.cod(f), {}};
    for (MorphismId g : gamma.components) {
      out.components.push_back(C.compose(g, f));
    }
    return out;
  }

  NormalCone cone_compose(FiniteCategory const& C,
                          NormalCone const&     gamma,
                          NormalCone const&     sigma) {
    Factorization const fac = normal_factorize(C, sigma(gamma.apex));
    return cone_star(C, gamma, fac.epi);
  }

  std::vector<ObjectId> m_set_of_cone(FiniteCategory const& C, NormalCone const& gamma) {
    std::vector<ObjectId> out;
    for (ObjectId c = 0; c < C.object_count(); ++c) {
      if (C.is_iso(gamma(c))) {
        out.push_back(c);
      }
    }
    return out;
  }

  namespace {
    void search_cones(FiniteCategory const&                     C,
                      ObjectId                                  apex,
                      std::vector<ObjectId> const&              order,
                      std::vector<std::vector<ObjectId>> const& supers,
                      std::size_t                               depth,
                      NormalCone&                               current,
                      std::vector<NormalCone>&                  out) {
      if (depth == order.size()) {
        for (MorphismId g : current.components) {
          if (C.is_iso(g)) {
            out.push_back(current);
            return;
          }
        }
        return;
      }
      ObjectId const c = order[depth];
      if (!supers[c].empty()) {
        MorphismId const forced = C.compose(C.inclusion(c, supers[c][0]), current(supers[c][0]));
        for (ObjectId d : supers[c]) {
          if (C.compose(C.inclusion(c, d), current(d)) != forced) {
            return;
          }
        }
        current.components[c] = forced;
        search_cones(C, apex, order, supers, depth + 1, current, out);
        return;
      }
      for (MorphismId g : C.hom(c, apex)) {
        current.components[c] = g;
        search_cones(C, apex, order, supers, depth + 1, current, out);
      }
    }
  }  // namespace

  std::vector<NormalCone> enumerate_normal_cones(FiniteCategory const& C,
                                                 std::size_t           max_objects) {
    std::size_t const       n = C.object_count();
    std::vector<NormalCone> out;
    if (n > max_objects) {
      return out;
    }
    std::vector<std::vector<ObjectId>> supers(n);
    for (ObjectId c = 0; c < n; ++c) {
      for (ObjectId d = 0; d < n; ++d) {
        if (c != d && C.is_subobject(c, d)) {
          supers[c].push_back(d);
        }
      }
    }
    std::vector<ObjectId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](ObjectId a, ObjectId b) {
      return supers[a].size() < supers[b].size();
    });
    for (ObjectId apex = 0; apex < n; ++apex) {
      NormalCone current{apex, std::vector<MorphismId>(n, kNone)};
      search_cones(C, apex, order, supers, 0, current, out);
    }
    return out;
  }

  std::string to_string(FiniteCategory const& C, NormalCone const& gamma) {
    std::string s = "cone@" + (gamma.apex < C.object_count() ? C.label(gamma.apex) : "?") + "{";
    for (std::size_t c = 0; c < gamma.components.size(); ++c) {
      MorphismId const g = gamma.components[c];
      s += (c ? "; " : "") + (g < C.morphism_count() ? C.to_string(g) : std::string("?"));
    }
    return s + "}";
  }

  HFunctor h_functor(FiniteCategory const& C, NormalCone const& gamma) {
    HFunctor h;
    h.values.resize(C.object_count());
    for (ObjectId c = 0; c < C.object_count(); ++c) {
      for (MorphismId f : C.hom(gamma.apex, c)) {
        h.values[c].push_back(cone_star(C, gamma, normal_factorize(C, f).epi));
      }
      std::sort(h.values[c].begin(), h.values[c].end());
      h.values[c].erase(std::unique(h.values[c].begin(), h.values[c].end()), h.values[c].end());
    }
    return h;
  }

  bool is_subfunctor(HFunctor const& a, HFunctor const& b) {
    for (std::size_t c = 0; c < a.values.size(); ++c) {
      if (!std::includes(b.values[c].begin(), b.values[c].end(), a.values[c].begin(),
                         a.values[c].end())) {
        return false;
      }
    }
    return true;
  }

  NormalCone h_functor_map(FiniteCategory const& C,
                           NormalCone const&     gamma,
                           MorphismId            f,
                           MorphismId            g) {
    return cone_star(C, gamma, normal_factorize(C, C.compose(f, g)).epi);
  }

  namespace {
    std::uint32_t position(std::vector<NormalCone> const& values, NormalCone const& x) {
      auto it = std::lower_bound(values.begin(), values.end(), x);
      if (it == values.end() || *it != x) {
        throw Error(ErrorKind::BadIndex, "cone is not in the target functor");
      }
      return static_cast<std::uint32_t>(it - values.begin());
    }
  }  // namespace

  NatTrans yoneda_transform(FiniteCategory const& C,
                            NormalCone const&     g1,
                            HFunctor const&       h1,
                            NormalCone const&     g2,
                            HFunctor const&       h2,
                            MorphismId            m) {
    if (C.dom(m) != g2.apex || C.cod(m) != g1.apex) {
      throw Error(ErrorKind::NotComposable, "representing morphism has the wrong ends");
    }
    NatTrans t;
    t.components.resize(C.object_count());
    for (ObjectId c = 0; c < C.object_count(); ++c) {
      for (NormalCone const& x : h1.values[c]) {
        // x = g1 * f° recovers f as x(apex g1) followed by the inclusion.
        MorphismId const f = C.compose(x(g1.apex), C.inclusion(x.apex, c));
        NormalCone const y = cone_star(C, g2, normal_factorize(C, C.compose(m, f)).epi);
        t.components[c].push_back(position(h2.values[c], y));
      }
    }
    return t;
  }

  NatTrans identity_transform(HFunctor const& h) {
    NatTrans t;
    for (auto const& v : h.values) {
      t.components.emplace_back(v.size());
      std::iota(t.components.back().begin(), t.components.back().end(), 0);
    }
    return t;
  }

  NatTrans compose(NatTrans const& a, NatTrans const& b) {
    NatTrans t;
    for (std::size_t c = 0; c < a.components.size(); ++c) {
      t.components.emplace_back();
      for (auto i : a.components[c]) {
        t.components.back().push_back(b.components[c].at(i));
      }
    }
    return t;
  }

  bool is_inclusion_transform(HFunctor const& a, HFunctor const& b, NatTrans const& t) {
    for (std::size_t c = 0; c < a.values.size(); ++c) {
      for (std::size_t i = 0; i < a.values[c].size(); ++i) {
        if (b.values[c].at(t.components[c][i]) != a.values[c][i]) {
          return false;
        }
      }
    }
    return true;
  }

  Report verify_normal_category(FiniteCategory const&          C,
                                std::vector<NormalCone> const& candidates) {
    std::size_t const n = C.object_count();
    auto              show = [&C](MorphismId f) {
      return [&C, f] { return C.to_string(f); };
    };
    Report r;

    Check laws("category", "category-laws");
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      laws.expect(C.compose(C.identity(C.dom(f)), f) == f
                      && C.compose(f, C.identity(C.cod(f))) == f,
                  show(f));
      for (MorphismId g : C.out(C.cod(f))) {
        MorphismId const fg = C.compose(f, g);
        for (MorphismId h : C.out(C.cod(g))) {
          laws.expect(C.compose(fg, h) == C.compose(f, C.compose(g, h)), show(f));
        }
      }
    }
    laws.into(r);

    Check sub("category", "subobjects");
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        if (!C.is_subobject(a, b)) {
          continue;
        }
        MorphismId const j = C.inclusion(a, b);
        sub.expect(C.is_mono(j), show(j));
        sub.expect(!(a != b && C.is_subobject(b, a)), show(j));
        sub.expect(!(a != b && C.is_iso(j)), show(j));
        for (ObjectId c = 0; c < n; ++c) {
          if (C.is_subobject(b, c)) {
            sub.expect(C.is_subobject(a, c) && C.compose(j, C.inclusion(b, c)) == C.inclusion(a, c),
                       show(j));
          }
          // f = h g with f, g inclusions forces h to be an inclusion.
          if (C.is_subobject(a, c) && C.is_subobject(b, c)) {
            for (MorphismId h : C.hom(a, b)) {
              if (C.compose(h, C.inclusion(b, c)) == C.inclusion(a, c)) {
                sub.expect(h == j, show(h));
              }
            }
          }
        }
      }
    }
    sub.into(r);

    Check nc1("category", "NC1");
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      auto const& fac = C.factorization(f);
      nc1.expect(fac.has_value() && C.is_epi(fac->epi), show(f));
    }
    nc1.into(r);

    Check nc2("category", "NC2");
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        if (a == b || !C.is_subobject(a, b)) {
          continue;
        }
        MorphismId const j     = C.inclusion(a, b);
        bool             split = false;
        for (MorphismId q : C.hom(b, a)) {
          split = split || C.compose(j, q) == C.identity(a);
        }
        nc2.expect(split, [&] { return "inclusion " + C.to_string(j) + " does not split"; });
      }
    }
    nc2.into(r);

    Check nc3("category", "NC3");
    std::vector<NormalCone> all;
    bool                    searched = false;
    for (ObjectId c = 0; c < n; ++c) {
      auto good = [&](NormalCone const& g) {
        return g.apex == c && g.components.size() == n && g(c) == C.identity(c)
               && is_normal_cone(C, g);
      };
      bool found = std::any_of(candidates.begin(), candidates.end(), good);
      if (!found && !searched) {
        all      = enumerate_normal_cones(C);
        searched = true;
      }
      if (!found) {
        found = std::any_of(all.begin(), all.end(), good);
      }
      nc3.expect(found, [&] { return "no cone with identity at " + C.label(c); });
    }
    nc3.into(r);
    return r;
  }

  FiniteCategory ideal(FiniteCategory const& C, ObjectId c, std::vector<ObjectId>* objects) {
    std::vector<ObjectId> keep;
    std::vector<ObjectId> local(C.object_count(), kNone);
    for (ObjectId a = 0; a < C.object_count(); ++a) {
      if (C.is_subobject(a, c)) {
        local[a] = static_cast<ObjectId>(keep.size());
        keep.push_back(a);
      }
    }
    std::vector<std::string> labels;
    std::vector<CatMorphism> mors, incl;
    for (ObjectId a : keep) {
      labels.push_back(C.label(a));
      for (ObjectId b : keep) {
        for (MorphismId f : C.hom(a, b)) {
          mors.push_back({local[a], C.morphism(f).carrier, local[b]});
        }
        if (a != b && C.is_subobject(a, b)) {
          incl.push_back({local[a], C.morphism(C.inclusion(a, b)).carrier, local[b]});
        }
      }
    }
    auto composer = [&](CatMorphism const& f, CatMorphism const& g) {
      MorphismId const x = *C.find({keep[f.dom], f.carrier, keep[f.cod]});
      MorphismId const y = *C.find({keep[g.dom], g.carrier, keep[g.cod]});
      return C.morphism(C.compose(x, y)).carrier;
    };
    if (objects != nullptr) {
      *objects = keep;
    }
    return FiniteCategory(std::move(labels), std::move(mors), composer, std::move(incl));
  }

  void check_functor(CategoryFunctor const& F, FiniteCategory const& C, FiniteCategory const& D) {
    if (F.objects.size() != C.object_count() || F.morphisms.size() != C.morphism_count()) {
      throw Error(ErrorKind::NotAFunctor, "functor data has the wrong size");
    }
    for (ObjectId a = 0; a < C.object_count(); ++a) {
      if (F.objects[a] >= D.object_count()) {
        throw Error(ErrorKind::NotAFunctor, "object " + C.label(a) + " has no image");
      }
    }
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      MorphismId const g = F.morphisms[f];
      if (g >= D.morphism_count() || D.dom(g) != F.objects[C.dom(f)]
          || D.cod(g) != F.objects[C.cod(f)]) {
        throw Error(ErrorKind::NotAFunctor, "image of " + C.to_string(f) + " has the wrong ends");
      }
    }
    for (ObjectId a = 0; a < C.object_count(); ++a) {
      if (F.morphisms[C.identity(a)] != D.identity(F.objects[a])) {
        throw Error(ErrorKind::NotAFunctor, "identity at " + C.label(a) + " is not preserved");
      }
    }
    for (MorphismId f = 0; f < C.morphism_count(); ++f) {
      for (MorphismId g : C.out(C.cod(f))) {
        if (F.morphisms[C.compose(f, g)] != D.compose(F.morphisms[f], F.morphisms[g])) {
          throw Error(ErrorKind::NotAFunctor,
                      "composite of " + C.to_string(f) + " and " + C.to_string(g)
                          + " is not preserved");
        }
      }
    }
  }

  Report local_iso_check(CategoryFunctor const& F,
                         FiniteCategory const&  C,
                         FiniteCategory const&  D,
                         std::string const&     suite) {
    check_functor(F, C, D);
    std::size_t const n = C.object_count();
    Report            r;

    Check incl(suite, "inclusion-preserving");
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        if (C.is_subobject(a, b)) {
          incl.expect(F.morphisms[C.inclusion(a, b)] == D.inclusion(F.objects[a], F.objects[b]),
                      [&] { return C.to_string(C.inclusion(a, b)); });
        }
      }
    }
    incl.into(r);

    Check full(suite, "full"), faithful(suite, "faithful");
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        std::set<MorphismId> image;
        for (MorphismId f : C.hom(a, b)) {
          image.insert(F.morphisms[f]);
        }
        auto where = [&] { return C.label(a) + " -> " + C.label(b); };
        faithful.expect(image.size() == C.hom(a, b).size(), where);
        full.expect(image.size() == D.hom(F.objects[a], F.objects[b]).size(), where);
      }
    }
    full.into(r);
    faithful.into(r);

    Check ideals(suite, "ideal-isomorphism");
    for (ObjectId c = 0; c < n; ++c) {
      std::set<ObjectId> image;
      std::size_t        below = 0;
      for (ObjectId a = 0; a < n; ++a) {
        if (!C.is_subobject(a, c)) {
          continue;
        }
        ++below;
        image.insert(F.objects[a]);
        for (ObjectId b = 0; b < n; ++b) {
          if (C.is_subobject(b, c)) {
            ideals.expect(C.is_subobject(a, b) == D.is_subobject(F.objects[a], F.objects[b]),
                          [&] { return "order inside the ideal of " + C.label(c); });
          }
        }
      }
      std::size_t target = 0;
      for (ObjectId d = 0; d < D.object_count(); ++d) {
        target += D.is_subobject(d, F.objects[c]);
      }
      ideals.expect(image.size() == below && below == target,
                    [&] { return "ideal of " + C.label(c) + " is not mapped onto"; });
    }
    ideals.into(r);
    return r;
  }

  Report isomorphism_check(CategoryFunctor const& F,
                           FiniteCategory const&  C,
                           FiniteCategory const&  D,
                           std::string const&     suite) {
    Report r = local_iso_check(F, C, D, suite);
    Check  bij(suite, "v-bijective");
    std::set<ObjectId> image(F.objects.begin(), F.objects.end());
    bij.expect(image.size() == C.object_count() && C.object_count() == D.object_count(),
               [&] { return std::to_string(image.size()) + " images for "
                            + std::to_string(D.object_count()) + " objects"; });
    bij.into(r);
    Check order(suite, "order-isomorphism");
    for (ObjectId a = 0; a < C.object_count(); ++a) {
      for (ObjectId b = 0; b < C.object_count(); ++b) {
        order.expect(C.is_subobject(a, b) == D.is_subobject(F.objects[a], F.objects[b]),
                     [&] { return C.label(a) + " vs " + C.label(b); });
      }
    }
    order.into(r);
    return r;
  }

}  // namespace regsg
