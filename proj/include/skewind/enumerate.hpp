#ifndef SKEWIND_ENUMERATE_HPP_
#define SKEWIND_ENUMERATE_HPP_

// Exhaustive generation of small bands and skew lattices up to
// isomorphism. Each class is represented by its canonical form (the
// lexicographically least table in the class) and the output is sorted.

#include <cstddef>
#include <vector>

#include "isomorphism.hpp"
#include "tables.hpp"

namespace skewind {

  inline constexpr std::size_t default_enumeration_bound = 4;
  //! Orders above this are refused whatever bound is requested.
  inline constexpr std::size_t max_enumeration_order = 5;

  //! Every idempotent associative table of order n (labelled, not reduced).
  std::vector<OperationTable> labelled_bands(std::size_t n);

  //! Throws Error(bound_exceeded) if n > bound or n > max_enumeration_order.
  std::vector<OperationTable> enumerate_bands(
      std::size_t n,
      std::size_t bound = default_enumeration_bound);

  std::vector<SkewLatticeTable> enumerate_skew_lattices(
      std::size_t n,
      std::size_t bound = default_enumeration_bound);

  //! Bijections preserving both meet and join, identity first.
  std::vector<Isomorphism> band_automorphisms(SkewLatticeTable const& s);

}  // namespace skewind

#endif  // SKEWIND_ENUMERATE_HPP_
