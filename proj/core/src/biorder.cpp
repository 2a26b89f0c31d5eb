#include "regsg/biorder.hpp"

#include <algorithm>
#include <array>

#include "regsg/error.hpp"

namespace regsg {

  BiorderedSet::BiorderedSet(std::vector<std::string> labels,
                             std::vector<bool>        omega_l,
                             std::vector<bool>        omega_r,
                             std::vector<Vertex>      products,
                             std::vector<Element>     elements)
      : labels_(std::move(labels)),
        omega_l_(std::move(omega_l)),
        omega_r_(std::move(omega_r)),
        products_(std::move(products)),
        elements_(std::move(elements)) {
    std::size_t const n = labels_.size();
    if (omega_l_.size() != n * n || omega_r_.size() != n * n
        || products_.size() != n * n
        || (!elements_.empty() && elements_.size() != n)) {
      throw Error(ErrorKind::BadIndex, "biordered set data has the wrong shape");
    }
  }

  Vertex BiorderedSet::product(Vertex e, Vertex f) const {
    if (e >= size() || f >= size()) {
      throw Error(ErrorKind::BadIndex, "vertex out of range");
    }
    Vertex const ef = products_[e * size() + f];
    if (ef == kUndefined) {
      throw Error(ErrorKind::NotComposable,
                  "(" + label(e) + ", " + label(f) + ") is not a basic pair");
    }
    return ef;
  }

  std::optional<Vertex> BiorderedSet::try_product(Vertex e, Vertex f) const noexcept {
    Vertex const ef = products_[e * size() + f];
    if (ef == kUndefined) {
      return std::nullopt;
    }
    return ef;
  }

  std::optional<Vertex> BiorderedSet::vertex_of(Element x) const noexcept {
    auto it = std::find(elements_.begin(), elements_.end(), x);
    if (it == elements_.end()) {
      return std::nullopt;
    }
    return static_cast<Vertex>(it - elements_.begin());
  }

  BiorderedSet build_biorder(FiniteSemigroup const& S) {
    if (!is_regular(S)) {
      throw Error(ErrorKind::NotRegular, S.name().empty() ? "input" : S.name());
    }
    auto const        E = idempotents(S);
    std::size_t const n = E.size();
    std::vector<bool> wl(n * n), wr(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        wl[i * n + j] = S.product(E[i], E[j]) == E[i];
        wr[i * n + j] = S.product(E[j], E[i]) == E[i];
      }
    }
    std::vector<Vertex> prod(n * n, BiorderedSet::kUndefined);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        bool const basic = wl[i * n + j] || wr[i * n + j] || wl[j * n + i]
                           || wr[j * n + i];
        if (!basic) {
          continue;
        }
        auto it = std::find(E.begin(), E.end(), S.product(E[i], E[j]));
        if (it == E.end()) {
          throw Error(ErrorKind::NotRegular, "basic product is not idempotent");
        }
        prod[i * n + j] = static_cast<Vertex>(it - E.begin());
      }
    }
    std::vector<std::string> labels;
    for (auto e : E) {
      labels.push_back(S.label(e));
    }
    return BiorderedSet(std::move(labels), std::move(wl), std::move(wr), std::move(prod), E);
  }

  MSet m_set(BiorderedSet const& E, Vertex e, Vertex f) {
    MSet m;
    for (Vertex g = 0; g < E.size(); ++g) {
      if (E.omega_l(g, e) && E.omega_r(g, f)) {
        m.members.push_back(g);
      }
    }
    std::size_t const k = m.members.size();
    m.preceq.assign(k * k, false);
    for (std::size_t i = 0; i < k; ++i) {
      Vertex const g = m.members[i];
      for (std::size_t j = 0; j < k; ++j) {
        Vertex const h = m.members[j];
        m.preceq[i * k + j] = E.omega_r(E.product(e, g), E.product(e, h))
                              && E.omega_l(E.product(g, f), E.product(h, f));
      }
    }
    return m;
  }

  std::vector<Vertex> sandwich_set(BiorderedSet const& E, Vertex e, Vertex f) {
    MSet const          m = m_set(E, e, f);
    std::vector<Vertex> out;
    for (std::size_t j = 0; j < m.members.size(); ++j) {
      bool top = true;
      for (std::size_t i = 0; i < m.members.size() && top; ++i) {
        top = m.precedes(i, j);
      }
      if (top) {
        out.push_back(m.members[j]);
      }
    }
    if (out.empty()) {
      throw Error(ErrorKind::EmptySandwich, "S(" + E.label(e) + ", " + E.label(f) + ")");
    }
    return out;
  }

  std::vector<ESquare> e_squares(BiorderedSet const& E) {
    std::size_t const    n = E.size();
    std::vector<ESquare> out;
    for (Vertex e = 0; e < n; ++e) {
      for (Vertex f = 0; f < n; ++f) {
        if (!E.R(e, f)) {
          continue;
        }
        for (Vertex g = 0; g < n; ++g) {
          if (!E.L(g, e)) {
            continue;
          }
          for (Vertex h = 0; h < n; ++h) {
            if (!E.L(f, h) || !E.R(h, g)) {
              continue;
            }
            ESquare sq{e, f, g, h};
            for (Vertex k = 0; k < n; ++k) {
              if (!sq.row_singular && E.omega_l(e, k) && E.omega_l(f, k)
                  && E.product(k, e) == g && E.product(k, f) == h) {
                sq.row_singular = true;
              }
              if (!sq.column_singular && E.omega_r(e, k) && E.omega_r(g, k)
                  && E.product(e, k) == f && E.product(g, k) == h) {
                sq.column_singular = true;
              }
            }
            out.push_back(sq);
          }
        }
      }
    }
    return out;
  }

  std::vector<ESquare> singular_squares(BiorderedSet const& E) {
    auto all = e_squares(E);
    all.erase(std::remove_if(all.begin(), all.end(), [](auto const& sq) {
                return !sq.singular();
              }),
              all.end());
    return all;
  }

  bool is_biorder_isomorphism(BiorderedSet const&        A,
                              BiorderedSet const&        B,
                              std::vector<Vertex> const& map) {
    if (A.size() != B.size() || map.size() != A.size()) {
      return false;
    }
    std::vector<bool> hit(B.size(), false);
    for (auto v : map) {
      if (v >= B.size() || hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    for (Vertex e = 0; e < A.size(); ++e) {
      for (Vertex f = 0; f < A.size(); ++f) {
        Vertex const x = map[e], y = map[f];
        if (A.omega_l(e, f) != B.omega_l(x, y) || A.omega_r(e, f) != B.omega_r(x, y)
            || A.in_domain(e, f) != B.in_domain(x, y)) {
          return false;
        }
        if (A.in_domain(e, f) && map[A.product(e, f)] != B.product(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    using Profile = std::array<std::size_t, 4>;

    std::vector<Profile> profiles(BiorderedSet const& E) {
      std::vector<Profile> out(E.size(), Profile{});
      for (Vertex e = 0; e < E.size(); ++e) {
        for (Vertex f = 0; f < E.size(); ++f) {
          out[e][0] += E.omega_l(f, e);
          out[e][1] += E.omega_r(f, e);
          out[e][2] += E.omega_l(e, f);
          out[e][3] += E.omega_r(e, f);
        }
      }
      return out;
    }

    bool consistent(BiorderedSet const&        A,
                    BiorderedSet const&        B,
                    std::vector<Vertex> const& map,
                    Vertex                     e) {
      for (Vertex f = 0; f <= e; ++f) {
        Vertex const x = map[e], y = map[f];
        if (A.omega_l(e, f) != B.omega_l(x, y) || A.omega_r(e, f) != B.omega_r(x, y)
            || A.omega_l(f, e) != B.omega_l(y, x) || A.omega_r(f, e) != B.omega_r(y, x)) {
          return false;
        }
      }
      return true;
    }

    bool extend(BiorderedSet const&         A,
                BiorderedSet const&         B,
                std::vector<Profile> const& pa,
                std::vector<Profile> const& pb,
                std::vector<Vertex>&        map,
                std::vector<bool>&          used) {
      Vertex const e = static_cast<Vertex>(map.size());
      if (e == A.size()) {
        return is_biorder_isomorphism(A, B, map);
      }
      for (Vertex x = 0; x < B.size(); ++x) {
        if (used[x] || pa[e] != pb[x]) {
          continue;
        }
        map.push_back(x);
        used[x] = true;
        if (consistent(A, B, map, e) && extend(A, B, pa, pb, map, used)) {
          return true;
        }
        used[x] = false;
        map.pop_back();
      }
      return false;
    }
  }  // namespace

  std::optional<std::vector<Vertex>> biorder_isomorphic(BiorderedSet const& A,
                                                        BiorderedSet const& B) {
    if (A.size() != B.size()) {
      return std::nullopt;
    }
    auto const          pa = profiles(A);
    auto const          pb = profiles(B);
    std::vector<Vertex> map;
    std::vector<bool>   used(B.size(), false);
    if (!extend(A, B, pa, pb, map, used)) {
      return std::nullopt;
    }
    return map;
  }

  Report verify_biorder(BiorderedSet const& E) {
    std::size_t const n = E.size();
    auto              pair = [&](Vertex e, Vertex f) {
      return [&E, e, f] { return "(" + E.label(e) + ", " + E.label(f) + ")"; };
    };
    Report r;

    Check quasi("biorder", "omega-quasiorders");
    for (Vertex e = 0; e < n; ++e) {
      quasi.expect(E.omega_l(e, e) && E.omega_r(e, e), pair(e, e));
      for (Vertex f = 0; f < n; ++f) {
        for (Vertex g = 0; g < n; ++g) {
          if (E.omega_l(e, f) && E.omega_l(f, g)) {
            quasi.expect(E.omega_l(e, g), pair(e, g));
          }
          if (E.omega_r(e, f) && E.omega_r(f, g)) {
            quasi.expect(E.omega_r(e, g), pair(e, g));
          }
        }
      }
    }
    quasi.into(r);

    Check partial("biorder", "omega-partial-order");
    for (Vertex e = 0; e < n; ++e) {
      for (Vertex f = 0; f < n; ++f) {
        if (e != f && E.omega(e, f)) {
          partial.expect(!E.omega(f, e), pair(e, f));
        }
      }
    }
    partial.into(r);

    Check basic("biorder", "basic-products");
    for (Vertex e = 0; e < n; ++e) {
      for (Vertex f = 0; f < n; ++f) {
        bool const related = E.omega_l(e, f) || E.omega_r(e, f) || E.omega_l(f, e)
                             || E.omega_r(f, e);
        basic.expect(related == E.in_domain(e, f), pair(e, f));
        if (E.omega_l(e, f)) {
          basic.expect(E.product(e, f) == e, pair(e, f));
        }
        if (E.omega_r(e, f)) {
          basic.expect(E.product(f, e) == e, pair(f, e));
        }
      }
    }
    basic.into(r);

    // f omega^r e gives f R fe omega e, and dually.
    Check b21("biorder", "basic-product-orders");
    for (Vertex e = 0; e < n; ++e) {
      for (Vertex f = 0; f < n; ++f) {
        if (E.omega_r(f, e)) {
          Vertex const fe = E.product(f, e);
          b21.expect(E.R(f, fe) && E.omega(fe, e), pair(f, e));
        }
        if (E.omega_l(f, e)) {
          Vertex const ef = E.product(e, f);
          b21.expect(E.L(f, ef) && E.omega(ef, e), pair(e, f));
        }
      }
    }
    b21.into(r);

    Check sandwich("biorder", "sandwich-sets");
    for (Vertex e = 0; e < n; ++e) {
      for (Vertex f = 0; f < n; ++f) {
        MSet const  m     = m_set(E, e, f);
        std::size_t tops  = 0;
        for (std::size_t j = 0; j < m.members.size(); ++j) {
          bool top = true;
          for (std::size_t i = 0; i < m.members.size() && top; ++i) {
            top = m.precedes(i, j);
          }
          tops += top;
        }
        sandwich.expect(tops > 0, pair(e, f));
      }
    }
    sandwich.into(r);
    return r;
  }

}  // namespace regsg
