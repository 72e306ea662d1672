#ifndef SKEWIND_RESTRICTION_SYSTEM_HPP_
#define SKEWIND_RESTRICTION_SYSTEM_HPP_

// A groupoid over a skew lattice of objects, with objects acting on
// morphisms by restriction (shrinking along <=) and extension (enlarging
// along >=) on either side:
//
//   restrict_left (a, g) = _a|g  defined iff a <=_L dg,  _a|g : a -> ...
//   restrict_right(g, a) = g|_a  defined iff a <=_R rg,  g|_a : ... -> a
//   extend_left   (a, g) = ^a|g  defined iff a >=_L dg,  ^a|g : a -> ...
//   extend_right  (g, a) = g|^a  defined iff a >=_R rg,  g|^a : ... -> a
//
// The tables are input data; every law is checked, never assumed.

#include <cstddef>
#include <vector>

#include "algebra.hpp"
#include "groupoid.hpp"
#include "isomorphism.hpp"
#include "report.hpp"
#include "tables.hpp"

namespace skewind {

  struct RestrictionSystem {
    FiniteGroupoid   groupoid;
    SkewLatticeTable objects;
    PartialTable     restrict_left;   // objects x morphisms
    PartialTable     restrict_right;  // morphisms x objects
    PartialTable     extend_left;     // objects x morphisms
    PartialTable     extend_right;    // morphisms x objects

    std::size_t object_count() const noexcept {
      return groupoid.object_count();
    }
    std::size_t morphism_count() const noexcept {
      return groupoid.morphism_count();
    }
    Index dom(Index g) const noexcept {
      return groupoid.dom(g);
    }
    Index cod(Index g) const noexcept {
      return groupoid.cod(g);
    }
    Index identity(Index a) const noexcept {
      return groupoid.identity_of(a);
    }
  };

  //! Throws Error(malformed_input) if the table shapes do not match the
  //! groupoid and object counts or an entry is out of range.
  void validate_shape(RestrictionSystem const& sys);

  //! a ^ g := _{a ^ dg}|g. Throws Error(malformed_system) if the table
  //! cell it needs is undefined.
  Index meet_restrict(RestrictionSystem const& sys, Index a, Index g);
  //! g ^ a := g|_{rg ^ a}.
  Index meet_corestrict(RestrictionSystem const& sys, Index g, Index a);
  //! a v g := ^{a v dg}|g.
  Index join_extend(RestrictionSystem const& sys, Index a, Index g);
  //! g v a := g|^{rg v a}.
  Index join_coextend(RestrictionSystem const& sys, Index g, Index a);

  struct ObjectActions {
    Index meet_image;     // a^g  = r(a ^ g)
    Index meet_preimage;  // ^g a = d(g ^ a)
    Index join_image;     // a_g  = r(a v g)
    Index join_preimage;  // _g a = d(g v a)
  };

  ObjectActions actions(RestrictionSystem const& sys, Index a, Index g);

  //! Definedness and shape of both restriction tables, the four
  //! restriction postulates (identities, preorders, transitivity,
  //! composition) and their lateral duals, the laws (a^b)^g = a^(b^g) and
  //! a ^ dg = d(a ^ g) with their duals, a ^ i_b = i_{a^b}, and
  //! (a ^ f) ^ b = a ^ (f ^ b).
  AxiomReport check_restriction_axioms(RestrictionSystem const& sys);

  //! The vertical duals of the above for the extension tables.
  AxiomReport check_extension_axioms(RestrictionSystem const& sys);

  //! Like the next checker, first confirms that each operator table is
  //! defined exactly on its domain (flag operators.domain), since the laws
  //! below are stated for operators with those domains.
  //! f = (a ^ f) v f*f and its equivalent ff* = (a ^ f) v f*, the order
  //! dual f = (a v f) ^ f*f, the lateral forms f = ff* v (f ^ a) and
  //! f = ff* ^ (f v a), and the reduction to absorption on identities.
  AxiomReport check_linking(RestrictionSystem const& sys);

  //! For both pseudoproducts: totality, agreement with composition and the
  //! object operations, associativity, the mixed laws with objects,
  //! e^{f^g} = (e^f)^g, idempotents = identities, regularity,
  //! (a ^ f)^-1 = a^f ^ f^-1, and the plus/minus identities. Records as
  //! observations (never failures) the restriction-semigroup identities
  //! (s^t)+ ^ s = s ^ t+ and t ^ (s^t)- = s- ^ t, and the relations that
  //! need not hold between left and right actions.
  AxiomReport verify_derived_identities(RestrictionSystem const& sys);

  //! Groupoid, object skew lattice, then the four checkers above.
  std::vector<AxiomReport> check_system(RestrictionSystem const& sys);

  //! A RestrictionSystem that passed every checker.
  class SkewInductiveGroupoid {
   public:
    //! Throws Error(axiom_violation) naming the first failing flag.
    static SkewInductiveGroupoid verify(RestrictionSystem sys);

    RestrictionSystem const& system() const noexcept {
      return _sys;
    }
    OperationTable const& table(BandOp op) const noexcept {
      return op == BandOp::meet ? _meet : _join;
    }

   private:
    SkewInductiveGroupoid() = default;

    RestrictionSystem _sys;
    OperationTable    _meet;
    OperationTable    _join;
  };

  //! (f|_{a^b}) o (_{a^b}|g) with a = rf, b = dg, or the join analogue
  //! (f|^{avb}) o (^{avb}|g).
  Index pseudoproduct(SkewInductiveGroupoid const& g,
                      Index                        f,
                      Index                        h,
                      BandOp                       op);

  //! The algebra on the morphisms; element s is morphism s.
  struct GroupoidAlgebra {
    BiBandAlgebra algebra;
    Isomorphism   morphism_to_element;
  };

  GroupoidAlgebra build_algebra(SkewInductiveGroupoid const& g);
  //! Verifies first; throws Error(axiom_violation) on failure.
  GroupoidAlgebra build_algebra(RestrictionSystem const& sys);

  //! The system as a structure on morphisms: composition, the operator
  //! tables re-indexed through identity morphisms, inversion.
  Structure to_structure(RestrictionSystem const& sys);

}  // namespace skewind

#endif  // SKEWIND_RESTRICTION_SYSTEM_HPP_
