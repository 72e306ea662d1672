#ifndef SKEWIND_ALGEBRA_HPP_
#define SKEWIND_ALGEBRA_HPP_

// Algebras (S, v, ^, *) of signature (2,2,1) and the axioms (i)-(viii)
// that characterise those arising from skew inductive groupoids.

#include <cstddef>
#include <optional>
#include <vector>

#include "isomorphism.hpp"
#include "report.hpp"
#include "tables.hpp"

namespace skewind {

  enum class BandOp { meet, join };

  char const* to_string(BandOp op) noexcept;

  struct BiBandAlgebra {
    OperationTable     join;
    OperationTable     meet;
    std::vector<Index> star;

    //! Throws Error(malformed_input) on size mismatch or star out of range.
    static BiBandAlgebra from_tables(OperationTable     join,
                                     OperationTable     meet,
                                     std::vector<Index> star);

    std::size_t order() const noexcept {
      return meet.order();
    }
    OperationTable const& op(BandOp o) const noexcept {
      return o == BandOp::meet ? meet : join;
    }
    Index operator()(BandOp o, Index s, Index t) const noexcept {
      return op(o)(s, t);
    }
    Index inv(Index s) const noexcept {
      return star[static_cast<std::size_t>(s)];
    }

    //! A skew lattice viewed as an algebra with star = identity.
    static BiBandAlgebra from_skew_lattice(SkewLatticeTable const& b);
    //! Both operations the group product, star = group inverse.
    static BiBandAlgebra from_group(GroupTable const& g);

    auto operator<=>(BiBandAlgebra const&) const = default;
  };

  //! Flags i.meet, i.join, ii, iii, iv, v.meet, v.join, vi.a-d, vii.a-d,
  //! viii.join, viii.meet. The four forms of (vi) are
  //!   ss* v (s ^ t*t) = s      ss* ^ (s v t*t) = s
  //!   (tt* ^ s) v s*s = s      (tt* v s) ^ s*s = s
  //! and those of (vii) are, with p = ss* o t and q = t o s*s,
  //!   ss* o tt* = p o p*       t*t o s*s = q* o q      for o in {v, ^}.
  AxiomReport check_axioms(BiBandAlgebra const& s);

  struct Skeleton {
    SkewLatticeTable   lattice;
    //! Skeleton index -> algebra element, increasing.
    std::vector<Index> embedding;
  };

  //! E(S) with both operations restricted to it. Throws
  //! Error(skeleton_not_closed) if the meet- and join-idempotents differ,
  //! if E is not closed under both operations, or if the restriction is
  //! not a skew lattice.
  Skeleton idempotent_skeleton(BiBandAlgebra const& s);

  struct PlusMinus {
    Index plus  = 0;  // s ^ s*
    Index minus = 0;  // s* ^ s
    //! s+ R s L s- in (S, op).
    bool plus_r_s_l_minus = false;
    //! s* is the unique inverse t of s with s+ L t R s-.
    bool star_unique_inverse = false;
  };

  PlusMinus plus_minus(BiBandAlgebra const& s,
                       Index                element,
                       BandOp               op = BandOp::meet);

  //! The identities (i)-(v) for s+ = s o s*, s- = s* o s, for both
  //! operations: flags meet.i ... join.v. Then op.associativity and, when
  //! that holds, the plus/minus Green's checks as op.greens.
  AxiomReport check_skehr(BiBandAlgebra const& s);

  struct AntiWitness {
    Index  s = 0;
    Index  t = 0;
    BandOp op = BandOp::meet;
  };

  //! First (s, t) with (s o t)* != t* o s*, meet before join.
  std::optional<AntiWitness> anti_automorphism_witness(BiBandAlgebra const& s);

  //! Inverses of s in (S, op): t with sts = s and tst = t.
  std::vector<Index> inverses_of(OperationTable const& op, Index s);
  //! Every element has exactly one inverse.
  bool is_inverse_semigroup(OperationTable const& op);

  Structure                  to_structure(BiBandAlgebra const& s);
  std::optional<Isomorphism> find_isomorphism(BiBandAlgebra const& a,
                                              BiBandAlgebra const& b);

}  // namespace skewind

#endif  // SKEWIND_ALGEBRA_HPP_
