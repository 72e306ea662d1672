#ifndef SKEWIND_RECONSTRUCTION_HPP_
#define SKEWIND_RECONSTRUCTION_HPP_

// From an algebra satisfying (i)-(viii) back to a skew inductive groupoid:
// objects are the elements s v s*, the morphism of s is
// (s v s*, s, s* v s), and
//
//   s o t   = s ^ t          when s* v s = t v t*
//   ^a|s    = a v s          when a >=_L s v s*
//   _a|s    = a ^ s          when a <=_L s v s*
//   s|^a    = s v a          when a >=_R s* v s
//   s|_a    = s ^ a          when a <=_R s* v s.

#include <vector>

#include "algebra.hpp"
#include "isomorphism.hpp"
#include "restriction_system.hpp"

namespace skewind {

  struct ReconstructedGroupoid {
    RestrictionSystem  system;
    //! Object index -> the algebra element s v s* it stands for.
    std::vector<Index> object_element;
    //! Algebra element -> object index, or undefined for non-objects.
    std::vector<Index> object_of_element;
  };

  //! Throws Error(axiom_violation) if s fails check_axioms and
  //! Error(composition_ambiguity) if s ^ t != s v t on a composable pair.
  ReconstructedGroupoid reconstruct(BiBandAlgebra const& s);

  struct SystemIsomorphism {
    Isomorphism objects;
    Isomorphism morphisms;
  };

  //! g -> (dg, g, rg) from sys onto reconstruct(build_algebra(sys)),
  //! checked on composition, inversion, the object lattice and all four
  //! operator tables. Throws Error(axiom_violation) if sys is not a skew
  //! inductive groupoid and Error(roundtrip_failure) with a counterexample
  //! if the map is not an isomorphism.
  SystemIsomorphism roundtrip_groupoid(RestrictionSystem const& sys);

  //! S -> build_algebra(reconstruct(S)), checked on both operations and
  //! star. Errors as above.
  Isomorphism roundtrip_algebra(BiBandAlgebra const& s);

  //! True iff the maps carry one system onto the other exactly.
  bool verify_system_isomorphism(RestrictionSystem const& a,
                                 RestrictionSystem const& b,
                                 SystemIsomorphism const& iso);

}  // namespace skewind

#endif  // SKEWIND_RECONSTRUCTION_HPP_
