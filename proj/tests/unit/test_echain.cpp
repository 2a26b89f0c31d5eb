#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "regsg/corpus.hpp"
#include "regsg/echain.hpp"

using namespace regsg;
using namespace regsg::testing;

namespace {

  // A 3 x 3 rectangular band: (i, j)(k, l) = (i, l).
  FiniteSemigroup rb33() {
    std::vector<std::vector<Element>> t(9, std::vector<Element>(9));
    std::vector<std::string>          labels;
    for (Element a = 0; a < 9; ++a) {
      labels.push_back("(" + std::to_string(a / 3) + "," + std::to_string(a % 3) + ")");
      for (Element b = 0; b < 9; ++b) {
        t[a][b] = (a / 3) * 3 + b % 3;
      }
    }
    return from_cayley(t, "RB33", labels);
  }

  std::vector<Vertex> path(BiorderedSet const& E, FiniteSemigroup const& S, std::vector<char const*> labels) {
    std::vector<Vertex> out;
    for (auto l : labels) {
      out.push_back(*E.vertex_of(by_label(S, l)));
    }
    return out;
  }

}  // namespace

TEST_SUITE("echain") {
  TEST_CASE("inessential vertices are removed") {
    FiniteSemigroup const S = rb33();
    BiorderedSet const    E = build_biorder(S);
    // e1 R e2 R e3 L e4 L e5 reduces to e1, e3, e5.
    EChain const c = canonicalize(E, path(E, S, {"(0,0)", "(0,1)", "(0,2)", "(1,2)", "(2,2)"}));
    CHECK(c.vertices == path(E, S, {"(0,0)", "(0,2)", "(2,2)"}));
    CHECK(is_canonical(E, c));
    // Repeats and back-and-forth steps collapse too.
    CHECK(canonicalize(E, path(E, S, {"(0,0)", "(0,0)", "(0,1)", "(0,0)"})) == identity_chain(c.dom()));
    CHECK(canonicalize(E, path(E, S, {"(1,1)"})) == identity_chain(path(E, S, {"(1,1)"})[0]));
  }

  TEST_CASE("RB22 chains") {
    FiniteSemigroup const S = corpus::rb22();
    BiorderedSet const    E = build_biorder(S);
    auto c = [&](std::vector<char const*> l) { return canonicalize(E, path(E, S, l)); };
    CHECK(c({"(0,0)", "(0,1)", "(0,0)"}) == c({"(0,0)"}));
    CHECK(compose(E, c({"(0,0)", "(0,1)"}), c({"(0,1)", "(1,1)"})).vertices
          == path(E, S, {"(0,0)", "(0,1)", "(1,1)"}));
    CHECK(compose(E, c({"(0,0)", "(0,1)"}), c({"(0,1)", "(0,0)"})) == c({"(0,0)"}));
    CHECK(invert(c({"(0,0)", "(0,1)", "(1,1)"})).vertices == path(E, S, {"(1,1)", "(0,1)", "(0,0)"}));
    // Nothing sits strictly below a vertex, so h . c only exists for h = dom c.
    EChain const d = c({"(0,0)", "(1,0)"});
    CHECK(act(E, d.dom(), d) == d);
  }

  TEST_CASE("unrelated neighbours are not a path") {
    FiniteSemigroup const S = corpus::rb22();
    BiorderedSet const    E = build_biorder(S);
    CHECK(thrown_kind([&] { (void) canonicalize(E, path(E, S, {"(0,0)", "(1,1)"})); }) == "NotAnEPath");
    EChain const c = canonicalize(E, path(E, S, {"(0,0)", "(0,1)"}));
    CHECK(thrown_kind([&] { (void) compose(E, c, c); }) == "NotComposable");
  }

  TEST_CASE("groupoid laws on short chains") {
    for (auto const& name : {"RB22", "I2", "T3"}) {
      CAPTURE(name);
      BiorderedSet const E      = build_biorder(corpus::by_name(name));
      auto const         chains = enumerate_chains(E, 3);
      for (auto const& c : chains) {
        REQUIRE(is_canonical(E, c));
        CHECK(compose(E, c, invert(c)) == identity_chain(c.dom()));
        CHECK(compose(E, identity_chain(c.dom()), c) == c);
        CHECK(invert(invert(c)) == c);
        CHECK(leq_E(E, c, c));
        for (Vertex h = 0; h < E.size(); ++h) {
          if (E.omega(h, c.dom())) {
            EChain const d = act(E, h, c);
            CHECK(d.dom() == h);
            CHECK(leq_E(E, d, c));
          } else {
            CHECK(thrown_kind([&] { (void) act(E, h, c); }) == "NotBelow");
          }
        }
      }
      for (auto const& a : chains) {
        for (auto const& b : chains) {
          if (a.cod() != b.dom()) {
            continue;
          }
          EChain const ab = compose(E, a, b);
          CHECK(is_canonical(E, ab));
          for (auto const& c : chains) {
            if (b.cod() == c.dom()) {
              CHECK(compose(E, ab, c) == compose(E, a, compose(E, b, c)));
            }
          }
        }
      }
      CHECK(verify_echain_groupoid(E, 4).ok());
    }
  }

  TEST_CASE("corestriction is the mirror of the action") {
    BiorderedSet const E = build_biorder(corpus::t3());
    for (auto const& c : enumerate_chains(E, 3)) {
      for (Vertex f = 0; f < E.size(); ++f) {
        if (E.omega(f, c.cod())) {
          EChain const d = corestrict(E, c, f);
          CHECK(d.cod() == f);
          CHECK(d == invert(act(E, f, invert(c))));
        }
      }
    }
  }
}
