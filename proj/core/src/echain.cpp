#include "regsg/echain.hpp"

#include <algorithm>
#include <map>

#include "regsg/error.hpp"

namespace regsg {

  EChain identity_chain(Vertex e) {
    return EChain{{e}};
  }

  EChain canonicalize(BiorderedSet const& E, std::vector<Vertex> const& path) {
    if (path.empty()) {
      throw Error(ErrorKind::NotAnEPath, "empty path");
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] >= E.size()) {
        throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(path[i]));
      }
      if (i > 0 && !E.R(path[i - 1], path[i]) && !E.L(path[i - 1], path[i])) {
        throw Error(ErrorKind::NotAnEPath,
                    E.label(path[i - 1]) + " and " + E.label(path[i])
                        + " are neither R nor L related");
      }
    }
    std::vector<Vertex> out;
    for (Vertex v : path) {
      while (true) {
        if (!out.empty() && out.back() == v) {
          break;
        }
        if (out.size() >= 2) {
          Vertex const a = out[out.size() - 2], b = out.back();
          if ((E.R(a, b) && E.R(b, v)) || (E.L(a, b) && E.L(b, v))) {
            out.pop_back();
            continue;
          }
        }
        out.push_back(v);
        break;
      }
    }
    return EChain{std::move(out)};
  }

  bool is_canonical(BiorderedSet const& E, EChain const& c) {
    if (c.vertices.empty()) {
      return false;
    }
    for (std::size_t i = 1; i < c.length(); ++i) {
      Vertex const a = c.vertices[i - 1], b = c.vertices[i];
      if (a == b || (!E.R(a, b) && !E.L(a, b))) {
        return false;
      }
      if (i >= 2) {
        Vertex const z = c.vertices[i - 2];
        if ((E.R(z, a) && E.R(a, b)) || (E.L(z, a) && E.L(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  EChain compose(BiorderedSet const& E, EChain const& c1, EChain const& c2) {
    if (c1.cod() != c2.dom()) {
      throw Error(ErrorKind::NotComposable,
                  to_string(E, c1) + " then " + to_string(E, c2));
    }
    std::vector<Vertex> path = c1.vertices;
    path.insert(path.end(), c2.vertices.begin() + 1, c2.vertices.end());
    return canonicalize(E, path);
  }

  EChain invert(EChain const& c) {
    return EChain{{c.vertices.rbegin(), c.vertices.rend()}};
  }

  EChain act(BiorderedSet const& E, Vertex h, EChain const& c) {
    if (!E.omega(h, c.dom())) {
      throw Error(ErrorKind::NotBelow,
                  E.label(h) + " is not below " + E.label(c.dom()));
    }
    std::vector<Vertex> path{h};
    Vertex              prev = h;
    for (std::size_t i = 1; i < c.length(); ++i) {
      Vertex const e = c.vertices[i];
      prev           = E.product(E.product(e, prev), e);
      path.push_back(prev);
    }
    return canonicalize(E, path);
  }

  EChain corestrict(BiorderedSet const& E, EChain const& c, Vertex f) {
    return invert(act(E, f, invert(c)));
  }

  bool leq_E(BiorderedSet const& E, EChain const& c1, EChain const& c2) {
    return E.omega(c1.dom(), c2.dom()) && c1 == act(E, c1.dom(), c2);
  }

  namespace {
    // 0 for an R step, 1 for an L step.
    int step_type(BiorderedSet const& E, Vertex a, Vertex b) {
      return E.R(a, b) ? 0 : 1;
    }

    void grow(BiorderedSet const& E,
              std::size_t         max_vertices,
              EChain&             current,
              std::vector<EChain>& out) {
      out.push_back(current);
      if (current.length() >= max_vertices) {
        return;
      }
      Vertex const last = current.cod();
      for (Vertex v = 0; v < E.size(); ++v) {
        if (v == last || (!E.R(last, v) && !E.L(last, v))) {
          continue;
        }
        if (current.length() >= 2) {
          Vertex const before = current.vertices[current.length() - 2];
          if (step_type(E, before, last) == step_type(E, last, v)) {
            continue;
          }
        }
        current.vertices.push_back(v);
        grow(E, max_vertices, current, out);
        current.vertices.pop_back();
      }
    }
  }  // namespace

  std::vector<EChain> enumerate_chains(BiorderedSet const& E, std::size_t max_vertices) {
    std::vector<EChain> out;
    if (max_vertices == 0) {
      return out;
    }
    for (Vertex e = 0; e < E.size(); ++e) {
      EChain c = identity_chain(e);
      grow(E, max_vertices, c, out);
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.length() < b.length();
    });
    return out;
  }

  std::string to_string(BiorderedSet const& E, EChain const& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.length(); ++i) {
      s += (i ? ", " : "") + E.label(c.vertices[i]);
    }
    return s + ")";
  }

  Report verify_echain_groupoid(BiorderedSet const& E, std::size_t max_vertices) {
    auto const chains = enumerate_chains(E, max_vertices);
    std::multimap<Vertex, std::size_t> by_dom, by_cod;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      by_dom.emplace(chains[i].dom(), i);
      by_cod.emplace(chains[i].cod(), i);
    }
    auto show = [&](EChain const& c) {
      return [&E, c] { return to_string(E, c); };
    };
    Report r;

    Check canon("echain", "canonical-form");
    for (auto const& c : chains) {
      canon.expect(is_canonical(E, c) && canonicalize(E, c.vertices) == c, show(c));
    }
    canon.into(r);

    Check laws("echain", "groupoid-laws");
    for (auto const& x : chains) {
      laws.expect(compose(E, identity_chain(x.dom()), x) == x
                      && compose(E, x, identity_chain(x.cod())) == x
                      && compose(E, x, invert(x)) == identity_chain(x.dom()),
                  show(x));
      for (auto [it, end] = by_dom.equal_range(x.cod()); it != end; ++it) {
        EChain const& y  = chains[it->second];
        EChain const  xy = compose(E, x, y);
        for (auto [jt, jend] = by_dom.equal_range(y.cod()); jt != jend; ++jt) {
          EChain const& z = chains[jt->second];
          laws.expect(compose(E, xy, z) == compose(E, x, compose(E, y, z)), show(x));
        }
      }
    }
    laws.into(r);

    Check order("echain", "order-partial");
    for (auto const& x : chains) {
      order.expect(leq_E(E, x, x), show(x));
      for (auto const& y : chains) {
        if (x != y && leq_E(E, x, y)) {
          order.expect(!leq_E(E, y, x), show(x));
        }
      }
    }
    for (Vertex e = 0; e < E.size(); ++e) {
      for (Vertex f = 0; f < E.size(); ++f) {
        order.expect(leq_E(E, identity_chain(e), identity_chain(f)) == E.omega(e, f),
                     [&] { return E.label(e) + " vs " + E.label(f); });
      }
    }
    order.into(r);

    Check og1("echain", "OG1"), og2("echain", "OG2"), og3("echain", "OG3"),
        og3s("echain", "OG3*");
    for (auto const& x : chains) {
      for (Vertex h = 0; h < E.size(); ++h) {
        if (!E.omega(h, x.dom())) {
          continue;
        }
        EChain const u = act(E, h, x);
        og3.expect(u.dom() == h && leq_E(E, u, x), show(x));
        std::size_t below = 0;
        for (auto [it, end] = by_dom.equal_range(h); it != end; ++it) {
          below += leq_E(E, chains[it->second], x);
        }
        og3.expect(below == 1, show(x));
        og2.expect(leq_E(E, invert(u), invert(x)), show(x));
        for (auto [it, end] = by_dom.equal_range(x.cod()); it != end; ++it) {
          EChain const& y = chains[it->second];
          EChain const  v = act(E, u.cod(), y);
          og1.expect(leq_E(E, compose(E, u, v), compose(E, x, y)), show(x));
        }
      }
      for (Vertex f = 0; f < E.size(); ++f) {
        if (!E.omega(f, x.cod())) {
          continue;
        }
        EChain const u = corestrict(E, x, f);
        og3s.expect(u.cod() == f && leq_E(E, u, x), show(x));
        std::size_t below = 0;
        for (auto [it, end] = by_cod.equal_range(f); it != end; ++it) {
          below += leq_E(E, chains[it->second], x);
        }
        og3s.expect(below == 1, show(x));
      }
    }
    og1.into(r);
    og2.into(r);
    og3.into(r);
    og3s.into(r);
    return r;
  }

}  // namespace regsg
