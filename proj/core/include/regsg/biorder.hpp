#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regsg/report.hpp"
#include "regsg/semigroup.hpp"

namespace regsg {

  // Idempotents of a biordered set are addressed by their position 0..size()-1.
  using Vertex = std::uint32_t;

  class BiorderedSet {
   public:
    static constexpr Vertex kUndefined = static_cast<Vertex>(-1);

    BiorderedSet() = default;

    // The matrices are row major of size n * n. products[e * n + f] must be
    // kUndefined exactly when (e, f) lies outside the basic pairs.
    BiorderedSet(std::vector<std::string> labels,
                 std::vector<bool>        omega_l,
                 std::vector<bool>        omega_r,
                 std::vector<Vertex>      products,
                 std::vector<Element>     elements = {});

    std::size_t size() const noexcept {
      return labels_.size();
    }

    std::string const& label(Vertex e) const {
      return labels_.at(e);
    }

    // e omega^l f iff ef = e; e omega^r f iff fe = e.
    bool omega_l(Vertex e, Vertex f) const noexcept {
      return omega_l_[e * size() + f];
    }
    bool omega_r(Vertex e, Vertex f) const noexcept {
      return omega_r_[e * size() + f];
    }
    bool omega(Vertex e, Vertex f) const noexcept {
      return omega_l(e, f) && omega_r(e, f);
    }
    bool L(Vertex e, Vertex f) const noexcept {
      return omega_l(e, f) && omega_l(f, e);
    }
    bool R(Vertex e, Vertex f) const noexcept {
      return omega_r(e, f) && omega_r(f, e);
    }

    bool in_domain(Vertex e, Vertex f) const noexcept {
      return products_[e * size() + f] != kUndefined;
    }

    // Basic product, throws NotComposable outside the basic pairs.
    Vertex                product(Vertex e, Vertex f) const;
    std::optional<Vertex> try_product(Vertex e, Vertex f) const noexcept;

    // Element of the parent semigroup, when the set came from one.
    Element element(Vertex e) const {
      return elements_.at(e);
    }
    std::vector<Element> const& elements() const noexcept {
      return elements_;
    }
    std::optional<Vertex> vertex_of(Element x) const noexcept;

   private:
    std::vector<std::string> labels_;
    std::vector<bool>        omega_l_;
    std::vector<bool>        omega_r_;
    std::vector<Vertex>      products_;
    std::vector<Element>     elements_;
  };

  // E(S) with the quasi-orders and basic products of S. Throws NotRegular.
  BiorderedSet build_biorder(FiniteSemigroup const& S);

  struct MSet {
    std::vector<Vertex> members;
    // preceq[i * members.size() + j] iff members[i] precedes members[j].
    std::vector<bool> preceq;

    bool precedes(std::size_t i, std::size_t j) const {
      return preceq[i * members.size() + j];
    }
  };

  // M(e, f) = omega^l(e) meet omega^r(f) with its quasi-order.
  MSet m_set(BiorderedSet const& E, Vertex e, Vertex f);

  // Greatest elements of M(e, f). Throws EmptySandwich when there are none.
  std::vector<Vertex> sandwich_set(BiorderedSet const& E, Vertex e, Vertex f);

  // [[e, f], [g, h]] with e R f L h R g L e.
  struct ESquare {
    Vertex e, f, g, h;
    bool   row_singular    = false;
    bool   column_singular = false;

    bool singular() const noexcept {
      return row_singular || column_singular;
    }
    bool degenerate() const noexcept {
      return e == f || e == g;
    }
  };

  std::vector<ESquare> e_squares(BiorderedSet const& E);
  std::vector<ESquare> singular_squares(BiorderedSet const& E);

  bool is_biorder_isomorphism(BiorderedSet const&        A,
                              BiorderedSet const&        B,
                              std::vector<Vertex> const& map);

  std::optional<std::vector<Vertex>> biorder_isomorphic(BiorderedSet const& A,
                                                        BiorderedSet const& B);

  Report verify_biorder(BiorderedSet const& E);

}  // namespace regsg
