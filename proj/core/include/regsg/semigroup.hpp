#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regsg/report.hpp"

namespace regsg {

  using Element = std::uint32_t;

  // A finite semigroup given by its multiplication table. Elements are the
  // integers 0, ..., order() - 1 and products are read left to right.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    std::string const& name() const noexcept {
      return name_;
    }

    std::size_t order() const noexcept {
      return order_;
    }

    Element product(Element a, Element b) const noexcept {
      return table_[a * order_ + b];
    }

    // Product of a nonempty word. Throws BadIndex for an empty one.
    Element product(std::span<Element const> word) const;
    Element product(std::initializer_list<Element> word) const {
      return product(std::span<Element const>(word.begin(), word.size()));
    }

    bool is_idempotent(Element e) const noexcept {
      return product(e, e) == e;
    }

    std::string const& label(Element a) const {
      return labels_.at(a);
    }

    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }

    std::vector<std::vector<Element>> table() const;

    friend FiniteSemigroup from_cayley(std::vector<std::vector<Element>> const&,
                                       std::string,
                                       std::vector<std::string>);

   private:
    std::string              name_;
    std::size_t              order_ = 0;
    std::vector<Element>     table_;
    std::vector<std::string> labels_;
  };

  // Throws BadIndex for a ragged table or an out of range entry, and
  // NotAssociative with the first offending triple.
  FiniteSemigroup from_cayley(std::vector<std::vector<Element>> const& table,
                              std::string              name   = "",
                              std::vector<std::string> labels = {});

  // Closure of full transformations of {0, ..., degree - 1}. The composite
  // f g sends p to g(f(p)). Elements are numbered in breadth first discovery
  // order, generators first. Throws BadMap for malformed generators.
  FiniteSemigroup from_generators(std::size_t                              degree,
                                  std::vector<std::vector<std::uint32_t>> const& gens,
                                  std::string name = "");

  // Partitions are stored as the least element of each class.
  struct GreenData {
    std::vector<Element>              lclass;
    std::vector<Element>              rclass;
    std::vector<Element>              hclass;
    std::vector<Element>              dclass;
    std::vector<Element>              idempotents;
    std::vector<std::vector<Element>> inverses;

    bool L(Element a, Element b) const noexcept {
      return lclass[a] == lclass[b];
    }
    bool R(Element a, Element b) const noexcept {
      return rclass[a] == rclass[b];
    }
    bool H(Element a, Element b) const noexcept {
      return hclass[a] == hclass[b];
    }
    bool D(Element a, Element b) const noexcept {
      return dclass[a] == dclass[b];
    }

    std::size_t class_count(std::vector<Element> const& partition) const;
  };

  GreenData green(FiniteSemigroup const& S);

  bool is_regular(FiniteSemigroup const& S);

  // The classes against principal ideals computed from scratch, H = L n R,
  // D = L o R = R o L, inverses, and at most one idempotent per H-class.
  // Regularity is a separate check so that it can fail on its own.
  Report verify_green(FiniteSemigroup const& S, GreenData const& g);

  // V(x), sorted.
  std::vector<Element> inverses_of(FiniteSemigroup const& S, Element x);

  std::vector<Element> idempotents(FiniteSemigroup const& S);

  // Least idempotent in the given class, if any.
  std::optional<Element> idempotent_in_lclass(FiniteSemigroup const& S,
                                              GreenData const&       g,
                                              Element                a);
  std::optional<Element> idempotent_in_rclass(FiniteSemigroup const& S,
                                              GreenData const&       g,
                                              Element                a);

  bool is_isomorphism(FiniteSemigroup const&      S,
                      FiniteSemigroup const&      T,
                      std::vector<Element> const& map);

  // A bijection phi with phi(ab) = phi(a) phi(b), or nullopt.
  std::optional<std::vector<Element>> find_isomorphism(FiniteSemigroup const& S,
                                                       FiniteSemigroup const& T);

}  // namespace regsg
