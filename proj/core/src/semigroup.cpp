#include "regsg/semigroup.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

#include "regsg/error.hpp"

namespace regsg {

  Element FiniteSemigroup::product(std::span<Element const> word) const {
    if (word.empty()) {
      throw Error(ErrorKind::BadIndex, "empty word");
    }
    auto    it  = word.begin();
    Element acc = *it++;
    for (; it != word.end(); ++it) {
      acc = product(acc, *it);
    }
    return acc;
  }

  std::vector<std::vector<Element>> FiniteSemigroup::table() const {
    std::vector<std::vector<Element>> out(order_);
    for (std::size_t a = 0; a < order_; ++a) {
      out[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
    }
    return out;
  }

  FiniteSemigroup from_cayley(std::vector<std::vector<Element>> const& table,
                              std::string                              name,
                              std::vector<std::string>                 labels) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorKind::BadIndex, "empty table");
    }
    FiniteSemigroup S;
    S.name_  = std::move(name);
    S.order_ = n;
    S.table_.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw Error(ErrorKind::BadIndex,
                    "row " + std::to_string(a) + " has length "
                        + std::to_string(table[a].size()) + ", expected "
                        + std::to_string(n));
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          throw Error(ErrorKind::BadIndex,
                      "entry (" + std::to_string(a) + ", " + std::to_string(b)
                          + ") = " + std::to_string(table[a][b])
                          + " is out of range");
        }
        S.table_.push_back(table[a][b]);
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab = S.product(a, b);
        for (Element c = 0; c < n; ++c) {
          if (S.product(ab, c) != S.product(a, S.product(b, c))) {
            throw Error(ErrorKind::NotAssociative,
                        "(" + std::to_string(a) + " " + std::to_string(b) + ") "
                            + std::to_string(c) + " != " + std::to_string(a) + " ("
                            + std::to_string(b) + " " + std::to_string(c) + ")");
          }
        }
      }
    }
    if (labels.empty()) {
      for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a));
      }
    } else if (labels.size() != n) {
      throw Error(ErrorKind::BadIndex, "label count does not match order");
    }
    S.labels_ = std::move(labels);
    return S;
  }

  namespace {
    using Transf = std::vector<std::uint32_t>;

    Transf compose(Transf const& f, Transf const& g) {
      Transf h(f.size());
      for (std::size_t p = 0; p < f.size(); ++p) {
        h[p] = g[f[p]];
      }
      return h;
    }

    std::string show(Transf const& f) {
      std::string s = "[";
      for (std::size_t i = 0; i < f.size(); ++i) {
        s += (i ? "," : "") + std::to_string(f[i]);
      }
      return s + "]";
    }
  }  // namespace

  FiniteSemigroup from_generators(std::size_t                    degree,
                                  std::vector<Transf> const&     gens,
                                  std::string                    name) {
    if (gens.empty()) {
      throw Error(ErrorKind::BadMap, "no generators");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].size() != degree) {
        throw Error(ErrorKind::BadMap,
                    "generator " + std::to_string(i) + " has length "
                        + std::to_string(gens[i].size()) + ", expected degree "
                        + std::to_string(degree));
      }
      for (auto p : gens[i]) {
        if (p >= degree) {
          throw Error(ErrorKind::BadMap,
                      "generator " + std::to_string(i) + " maps to "
                          + std::to_string(p) + " outside the degree");
        }
      }
    }
    std::vector<Transf>       elts;
    std::map<Transf, Element> index;
    for (auto const& g : gens) {
      if (index.emplace(g, elts.size()).second) {
        elts.push_back(g);
      }
    }
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (auto const& g : gens) {
        Transf h = compose(elts[i], g);
        if (index.emplace(h, elts.size()).second) {
          elts.push_back(std::move(h));
        }
      }
    }
    std::vector<std::vector<Element>> table(elts.size(),
                                            std::vector<Element>(elts.size()));
    std::vector<std::string>          labels;
    for (std::size_t a = 0; a < elts.size(); ++a) {
      labels.push_back(show(elts[a]));
      for (std::size_t b = 0; b < elts.size(); ++b) {
        table[a][b] = index.at(compose(elts[a], elts[b]));
      }
    }
    return from_cayley(table, std::move(name), std::move(labels));
  }

  std::size_t GreenData::class_count(std::vector<Element> const& partition) const {
    std::size_t count = 0;
    for (std::size_t a = 0; a < partition.size(); ++a) {
      count += partition[a] == a;
    }
    return count;
  }

  namespace {
    // Least element with the same principal ideal.
    std::vector<Element> classes_of(std::vector<std::vector<bool>> const& ideals) {
      std::vector<Element> out(ideals.size());
      for (std::size_t a = 0; a < ideals.size(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
          if (ideals[a] == ideals[b]) {
            out[a] = b;
            break;
          }
        }
      }
      return out;
    }
  }  // namespace

  GreenData green(FiniteSemigroup const& S) {
    std::size_t const              n = S.order();
    std::vector<std::vector<bool>> left(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> right(n, std::vector<bool>(n, false));
    for (Element a = 0; a < n; ++a) {
      left[a][a]  = true;
      right[a][a] = true;
      for (Element s = 0; s < n; ++s) {
        left[a][S.product(s, a)]  = true;
        right[a][S.product(a, s)] = true;
      }
    }
    GreenData g;
    g.lclass = classes_of(left);
    g.rclass = classes_of(right);
    g.hclass.resize(n);
    g.dclass.resize(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b <= a; ++b) {
        if (g.L(a, b) && g.R(a, b)) {
          g.hclass[a] = b;
          break;
        }
      }
    }
    // a D b iff some c has a L c R b.
    for (Element a = 0; a < n; ++a) {
      g.dclass[a] = a;
      for (Element b = 0; b < a; ++b) {
        bool related = false;
        for (Element c = 0; c < n && !related; ++c) {
          related = g.L(a, c) && g.R(c, b);
        }
        if (related) {
          g.dclass[a] = g.dclass[b];
          break;
        }
      }
    }
    g.idempotents = idempotents(S);
    g.inverses.resize(n);
    for (Element a = 0; a < n; ++a) {
      g.inverses[a] = inverses_of(S, a);
    }
    return g;
  }

  Report verify_green(FiniteSemigroup const& S, GreenData const& g) {
    std::size_t const           n = S.order();
    std::vector<std::set<Element>> left(n), right(n);
    for (Element a = 0; a < n; ++a) {
      left[a].insert(a);
      right[a].insert(a);
      for (Element s = 0; s < n; ++s) {
        left[a].insert(S.product(s, a));
        right[a].insert(S.product(a, s));
      }
    }
    auto pair = [&](Element a, Element b) { return S.label(a) + ", " + S.label(b); };
    Report r;
    Check  l("green", "L-classes"), rr("green", "R-classes"), h("green", "H-classes"), d("green", "D-classes");
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        l.expect(g.L(a, b) == (left[a] == left[b]), [&] { return pair(a, b); });
        rr.expect(g.R(a, b) == (right[a] == right[b]), [&] { return pair(a, b); });
        h.expect(g.H(a, b) == (g.L(a, b) && g.R(a, b)), [&] { return pair(a, b); });
        bool lr = false, rl = false;
        for (Element c = 0; c < n; ++c) {
          lr = lr || (left[a] == left[c] && right[c] == right[b]);
          rl = rl || (right[a] == right[c] && left[c] == left[b]);
        }
        d.expect(lr == rl && g.D(a, b) == lr, [&] { return pair(a, b); });
      }
    }
    l.into(r);
    rr.into(r);
    h.into(r);
    d.into(r);

    Check inv("green", "inverses");
    for (Element x = 0; x < n; ++x) {
      std::vector<Element> expected;
      for (Element y = 0; y < n; ++y) {
        if (S.product({x, y, x}) == x && S.product({y, x, y}) == y) {
          expected.push_back(y);
        }
      }
      inv.expect(g.inverses[x] == expected, [&] { return "V(" + S.label(x) + ")"; });
    }
    inv.into(r);

    Check idem("green", "idempotents-per-H");
    for (Element e : g.idempotents) {
      for (Element f : g.idempotents) {
        idem.expect(e == f || !g.H(e, f), [&] { return pair(e, f); });
      }
    }
    idem.into(r);

    Check reg("green", "regular");
    for (Element x = 0; x < n; ++x) {
      reg.expect(!g.inverses[x].empty(), [&] { return S.label(x) + " has no inverse"; });
    }
    reg.into(r);
    return r;
  }

  std::vector<Element> idempotents(FiniteSemigroup const& S) {
    std::vector<Element> out;
    for (Element e = 0; e < S.order(); ++e) {
      if (S.is_idempotent(e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  std::vector<Element> inverses_of(FiniteSemigroup const& S, Element x) {
    if (x >= S.order()) {
      throw Error(ErrorKind::BadIndex, "element " + std::to_string(x));
    }
    std::vector<Element> out;
    for (Element y = 0; y < S.order(); ++y) {
      if (S.product({x, y, x}) == x && S.product({y, x, y}) == y) {
        out.push_back(y);
      }
    }
    return out;
  }

  bool is_regular(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.order(); ++x) {
      bool found = false;
      for (Element y = 0; y < S.order() && !found; ++y) {
        found = S.product({x, y, x}) == x;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  std::optional<Element> idempotent_in_lclass(FiniteSemigroup const& S,
                                              GreenData const&       g,
                                              Element                a) {
    for (auto e : g.idempotents) {
      if (g.L(e, a)) {
        return e;
      }
    }
    (void) S;
    return std::nullopt;
  }

  std::optional<Element> idempotent_in_rclass(FiniteSemigroup const& S,
                                              GreenData const&       g,
                                              Element                a) {
    for (auto e : g.idempotents) {
      if (g.R(e, a)) {
        return e;
      }
    }
    (void) S;
    return std::nullopt;
  }

  bool is_isomorphism(FiniteSemigroup const&      S,
                      FiniteSemigroup const&      T,
                      std::vector<Element> const& map) {
    if (S.order() != T.order() || map.size() != S.order()) {
      return false;
    }
    std::vector<bool> hit(T.order(), false);
    for (auto b : map) {
      if (b >= T.order() || hit[b]) {
        return false;
      }
      hit[b] = true;
    }
    for (Element a = 0; a < S.order(); ++a) {
      for (Element b = 0; b < S.order(); ++b) {
        if (map[S.product(a, b)] != T.product(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    using Signature = std::array<std::size_t, 8>;

    std::vector<Signature> signatures(FiniteSemigroup const& S) {
      GreenData const        g = green(S);
      std::size_t const      n = S.order();
      std::vector<Signature> out(n);
      auto size_of = [&](std::vector<Element> const& part, Element a) {
        return static_cast<std::size_t>(
            std::count(part.begin(), part.end(), part[a]));
      };
      for (Element a = 0; a < n; ++a) {
        std::vector<bool> left(n, false), right(n, false);
        for (Element s = 0; s < n; ++s) {
          left[S.product(s, a)]  = true;
          right[S.product(a, s)] = true;
        }
        out[a] = {S.is_idempotent(a),
                  size_of(g.lclass, a),
                  size_of(g.rclass, a),
                  size_of(g.hclass, a),
                  size_of(g.dclass, a),
                  g.inverses[a].size(),
                  static_cast<std::size_t>(std::count(left.begin(), left.end(), true)),
                  static_cast<std::size_t>(std::count(right.begin(), right.end(), true))};
      }
      return out;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& S, FiniteSemigroup const& T)
          : S_(S),
            T_(T),
            sig_s_(signatures(S)),
            sig_t_(signatures(T)),
            map_(S.order(), kUnset),
            used_(T.order(), false) {}

      bool feasible() const {
        auto a = sig_s_, b = sig_t_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
      }

      bool run() {
        auto next = std::find(map_.begin(), map_.end(), kUnset);
        if (next == map_.end()) {
          return true;
        }
        Element const a = static_cast<Element>(next - map_.begin());
        for (Element b = 0; b < T_.order(); ++b) {
          if (used_[b] || sig_s_[a] != sig_t_[b]) {
            continue;
          }
          std::size_t const mark = trail_.size();
          if (bind(a, b) && propagate() && run()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      std::vector<Element> result() const {
        return {map_.begin(), map_.end()};
      }

     private:
      static constexpr Element kUnset = static_cast<Element>(-1);

      bool bind(Element a, Element b) {
        if (map_[a] != kUnset) {
          return map_[a] == b;
        }
        if (used_[b] || sig_s_[a] != sig_t_[b]) {
          return false;
        }
        map_[a]  = b;
        used_[b] = true;
        trail_.push_back(a);
        pending_.push_back(a);
        return true;
      }

      bool propagate() {
        while (!pending_.empty()) {
          Element const x = pending_.front();
          pending_.pop_front();
          for (std::size_t i = 0; i < trail_.size(); ++i) {
            Element const y = trail_[i];
            if (!bind(S_.product(x, y), T_.product(map_[x], map_[y]))
                || !bind(S_.product(y, x), T_.product(map_[y], map_[x]))) {
              pending_.clear();
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (trail_.size() > mark) {
          used_[map_[trail_.back()]] = false;
          map_[trail_.back()]        = kUnset;
          trail_.pop_back();
        }
        pending_.clear();
      }

      FiniteSemigroup const& S_;
      FiniteSemigroup const& T_;
      std::vector<Signature> sig_s_;
      std::vector<Signature> sig_t_;
      std::vector<Element>   map_;
      std::vector<bool>      used_;
      std::vector<Element>   trail_;
      std::deque<Element>    pending_;
    };
  }  // namespace

  std::optional<std::vector<Element>> find_isomorphism(FiniteSemigroup const& S,
                                                       FiniteSemigroup const& T) {
    if (S.order() != T.order()
        || idempotents(S).size() != idempotents(T).size()) {
      return std::nullopt;
    }
    IsoSearch search(S, T);
    if (!search.feasible() || !search.run()) {
      return std::nullopt;
    }
    auto map = search.result();
    if (!is_isomorphism(S, T, map)) {
      return std::nullopt;
    }
    return map;
  }

}  // namespace regsg
