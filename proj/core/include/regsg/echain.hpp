#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "regsg/biorder.hpp"
#include "regsg/report.hpp"

namespace regsg {

  // A canonical E-chain: consecutive vertices are distinct and R or L related,
  // and the relation type alternates along the chain.
  struct EChain {
    std::vector<Vertex> vertices;

    Vertex dom() const {
      return vertices.front();
    }
    Vertex cod() const {
      return vertices.back();
    }
    std::size_t length() const noexcept {
      return vertices.size();
    }

    auto operator<=>(EChain const&) const = default;
  };

  EChain identity_chain(Vertex e);

  // Collapses repeated vertices and drops inessential ones. Throws NotAnEPath
  // if two consecutive vertices are neither R nor L related.
  EChain canonicalize(BiorderedSet const& E, std::vector<Vertex> const& path);

  bool is_canonical(BiorderedSet const& E, EChain const& c);

  // Throws NotComposable unless c1.cod() == c2.dom().
  EChain compose(BiorderedSet const& E, EChain const& c1, EChain const& c2);
  EChain invert(EChain const& c);

  // h . c for h omega c.dom(); throws NotBelow otherwise.
  EChain act(BiorderedSet const& E, Vertex h, EChain const& c);
  // Unique chain below c with codomain f.
  EChain corestrict(BiorderedSet const& E, EChain const& c, Vertex f);

  bool leq_E(BiorderedSet const& E, EChain const& c1, EChain const& c2);

  // All canonical chains with at most max_vertices vertices, shortest first.
  std::vector<EChain> enumerate_chains(BiorderedSet const& E, std::size_t max_vertices);

  std::string to_string(BiorderedSet const& E, EChain const& c);

  // Groupoid laws and ordered groupoid axioms on chains of bounded length.
  Report verify_echain_groupoid(BiorderedSet const& E, std::size_t max_vertices);

}  // namespace regsg
