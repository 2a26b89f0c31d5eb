#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "regsg/biorder.hpp"
#include "regsg/corpus.hpp"

using namespace regsg;
using namespace regsg::testing;

namespace {

  // S(e, f) = { g in E : ge = g = fg, egf = ef }.
  std::vector<Element> sandwich_oracle(FiniteSemigroup const& S, Element e, Element f) {
    std::vector<Element> out;
    for (Element g : scan_idempotents(S)) {
      if (S.product(g, e) == g && S.product(f, g) == g && S.product({e, g, f}) == S.product(e, f)) {
        out.push_back(g);
      }
    }
    return out;
  }

  BiorderedSet rectangular_band(std::size_t rows, std::size_t cols) {
    std::size_t const                 n = rows * cols;
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = static_cast<Element>((a / cols) * cols + b % cols);
      }
    }
    return build_biorder(from_cayley(t, "rectangular band"));
  }

}  // namespace

TEST_SUITE("biorder") {
  TEST_CASE("vertices are the idempotents") {
    for (auto const& S : whole_corpus()) {
      BiorderedSet const E = build_biorder(S);
      CHECK(E.elements() == scan_idempotents(S));
      for (Vertex v = 0; v < E.size(); ++v) {
        CHECK(E.vertex_of(E.element(v)) == v);
      }
    }
  }

  TEST_CASE("quasi-orders and basic products come from the table") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      BiorderedSet const E = build_biorder(S);
      for (Vertex e = 0; e < E.size(); ++e) {
        for (Vertex f = 0; f < E.size(); ++f) {
          Element const x = E.element(e);
          Element const y = E.element(f);
          CHECK(E.omega_l(e, f) == (S.product(x, y) == x));
          CHECK(E.omega_r(e, f) == (S.product(y, x) == x));
          bool const basic = E.omega_l(e, f) || E.omega_r(e, f) || E.omega_l(f, e) || E.omega_r(f, e);
          REQUIRE(E.in_domain(e, f) == basic);
          if (basic) {
            CHECK(E.element(E.product(e, f)) == S.product(x, y));
          } else {
            CHECK(thrown_kind([&] { (void) E.product(e, f); }) == "NotComposable");
          }
        }
      }
      CHECK(verify_biorder(E).ok());
    }
  }

  TEST_CASE("sandwich sets match the closed form") {
    for (auto const& S : whole_corpus()) {
      CAPTURE(S.name());
      BiorderedSet const E = build_biorder(S);
      for (Vertex e = 0; e < E.size(); ++e) {
        for (Vertex f = 0; f < E.size(); ++f) {
          std::vector<Element> got;
          for (Vertex g : sandwich_set(E, e, f)) {
            got.push_back(E.element(g));
          }
          std::sort(got.begin(), got.end());
          CHECK(got == sandwich_oracle(S, E.element(e), E.element(f)));
        }
      }
    }
  }

  TEST_CASE("RB22 sandwich and squares") {
    FiniteSemigroup const S = corpus::rb22();
    BiorderedSet const    E = build_biorder(S);
    auto v = [&](char const* l) { return *E.vertex_of(by_label(S, l)); };
    CHECK(sandwich_set(E, v("(0,0)"), v("(1,1)")) == std::vector<Vertex>{v("(1,0)")});
    // e fixes f's row and g's column: 4 * 2 * 2.
    CHECK(e_squares(E).size() == 16);
    auto const sing = singular_squares(E);
    CHECK(sing.size() == 12);
    for (auto const& sq : sing) {
      CHECK(sq.singular());
    }
    // No two distinct idempotents are omega-comparable, so only the
    // degenerate squares are singular.
    for (auto const& sq : e_squares(E)) {
      CHECK(sq.singular() == sq.degenerate());
      CHECK(E.R(sq.e, sq.f));
      CHECK(E.L(sq.f, sq.h));
      CHECK(E.R(sq.h, sq.g));
      CHECK(E.L(sq.g, sq.e));
    }
  }

  TEST_CASE("M-set quasi-order") {
    FiniteSemigroup const S = corpus::t3();
    BiorderedSet const    E = build_biorder(S);
    for (Vertex e = 0; e < E.size(); ++e) {
      for (Vertex f = 0; f < E.size(); ++f) {
        MSet const M = m_set(E, e, f);
        for (Vertex g : M.members) {
          CHECK(E.omega_l(g, e));
          CHECK(E.omega_r(g, f));
        }
        CHECK_FALSE(M.members.empty());
      }
    }
  }

  TEST_CASE("isomorphic biordered sets") {
    BiorderedSet const A = rectangular_band(2, 3);
    BiorderedSet const B = rectangular_band(3, 2);
    CHECK(A.size() == 6);
    CHECK(biorder_isomorphic(A, A).has_value());
    // Swapping rows and columns exchanges R and L, which is not an isomorphism.
    CHECK_FALSE(biorder_isomorphic(A, B).has_value());
    CHECK_FALSE(biorder_isomorphic(A, build_biorder(corpus::rb22())).has_value());
  }
}
