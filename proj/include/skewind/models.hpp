#ifndef SKEWIND_MODELS_HPP_
#define SKEWIND_MODELS_HPP_

// Semidirect products G x| B of a group acting on a skew lattice by
// automorphisms, as algebras
//
//   (u,a) o (v,b) = (uv, a^v o b),   (u,a)* = (u^-1, a^{u^-1}),
//
// and as skew inductive groupoids with morphisms (b, g, b^g).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "report.hpp"
#include "restriction_system.hpp"
#include "tables.hpp"

namespace skewind {

  //! A right action a -> a^u of a group on a skew lattice.
  struct GroupAction {
    GroupTable                      group;
    SkewLatticeTable                lattice;
    std::vector<std::vector<Index>> act;  // act[a][u] = a^u

    Index apply(Index a, Index u) const noexcept {
      return act[static_cast<std::size_t>(a)][static_cast<std::size_t>(u)];
    }
    static GroupAction trivial(GroupTable g, SkewLatticeTable b);
  };

  //! Flags: shape, identity (a^1 = a), composition ((a^u)^v = a^{uv}),
  //! automorphism (each a -> a^u is a bijection preserving meet and join).
  AxiomReport check_action(GroupAction const& a);

  struct SemidirectAlgebra {
    BiBandAlgebra algebra;
    std::size_t   band_order = 0;

    Index encode(Index u, Index a) const noexcept {
      return static_cast<Index>(static_cast<std::size_t>(u) * band_order
                                + static_cast<std::size_t>(a));
    }
    std::pair<Index, Index> decode(Index s) const noexcept {
      auto const n = static_cast<Index>(band_order);
      return {s / n, s % n};
    }
  };

  //! Throws Error(action_invalid) if check_action fails.
  SemidirectAlgebra semidirect_algebra(GroupAction const& a);

  struct SemidirectGroupoid {
    RestrictionSystem system;
    std::size_t       band_order = 0;

    //! Morphism (b, g, b^g) has index g * |B| + b.
    Index morphism(Index b, Index g) const noexcept {
      return static_cast<Index>(static_cast<std::size_t>(g) * band_order
                                + static_cast<std::size_t>(b));
    }
    //! (b, g) of a morphism index.
    std::pair<Index, Index> decode(Index m) const noexcept {
      auto const n = static_cast<Index>(band_order);
      return {m % n, m / n};
    }
  };

  //! Objects B, morphisms (b, g, b^g), composition
  //! (b, g, b^g) o (b^g, h, b^{gh}) = (b, gh, b^{gh}), and
  //!   _a|(b,g,b^g) = ^a|(b,g,b^g) = (a, g, a^g)
  //!   (b,g,c)|_a  = (b,g,c)|^a  = (a^{g^-1}, g, a)
  //! on the cells where each operator is defined. Throws
  //! Error(action_invalid).
  SemidirectGroupoid semidirect_groupoid(GroupAction const& a);

  struct KernelReport {
    //! kernels[a] = K_a, sorted group elements.
    std::vector<std::vector<Index>> kernels;
    std::vector<Index>              common;
    //! chain (K_a <= K_{avb} <= K_b), all_equal, normal.
    AxiomReport report;
  };

  //! K_a = { u : (u,a) ~ (1,a) } for ~ the greatest idempotent-separating
  //! congruence of the semidirect algebra compatible with v, ^ and *.
  //! Throws Error(action_invalid).
  KernelReport congruence_kernels(GroupAction const& a);

  //! The listed properties of G x| B, checked exhaustively: idempotents
  //! are the (1,a); ss*s = s; ss* = (1, a^{u^-1}) and s*s = (1,a); the
  //! closed forms of p p* and p* p for p = (u,a)(v,b); the reduction
  //! criterion; the normal form u ^ a and u v a when B has a top or
  //! bottom; orthodoxy, and non-inverse via a witness when one exists.
  AxiomReport check_semidirect_properties(GroupAction const&       a,
                                          SemidirectAlgebra const& s);

  struct CatalogGroup {
    std::string        name;
    GroupTable         group;
    std::vector<Index> generators;
  };

  //! C1, C2, C3, C4, C2xC2, S3.
  std::vector<CatalogGroup> const& group_catalog();

  struct SuiteBounds {
    std::size_t max_group_order = 6;
    std::size_t max_band_order  = 4;
  };

  struct ModelInstance {
    std::string        name;
    std::string        group_name;
    GroupAction        action;
    SemidirectAlgebra  algebra;
    SemidirectGroupoid groupoid;
  };

  //! Every action of every catalog group of order <= max_group_order on
  //! every skew lattice of order <= max_band_order, one per class under
  //! Aut(G) x Aut(B). Throws Error(bound_exceeded) beyond order 6 or the
  //! enumeration limit.
  std::vector<ModelInstance> generate_model_suite(SuiteBounds bounds = {});

  //! All actions of g on b up to Aut(G) x Aut(B), via generator images.
  std::vector<GroupAction> enumerate_actions(CatalogGroup const&     g,
                                             SkewLatticeTable const& b);

}  // namespace skewind

#endif  // SKEWIND_MODELS_HPP_
