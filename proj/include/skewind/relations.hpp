#ifndef SKEWIND_RELATIONS_HPP_
#define SKEWIND_RELATIONS_HPP_

// Natural preorders of a skew lattice and Green's relations of a finite
// semigroup.

#include <cstddef>
#include <vector>

#include "report.hpp"
#include "tables.hpp"

namespace skewind {

  //! An n x n boolean relation.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : _n(n), _bits(n * n, false) {}

    std::size_t size() const noexcept {
      return _n;
    }
    bool operator()(Index a, Index b) const noexcept {
      return _bits[static_cast<std::size_t>(a) * _n
                   + static_cast<std::size_t>(b)];
    }
    void set(Index a, Index b, bool v = true) {
      _bits[static_cast<std::size_t>(a) * _n + static_cast<std::size_t>(b)]
          = v;
    }

    bool     is_reflexive() const;
    bool     is_transitive() const;
    Relation converse() const;

    bool operator==(Relation const&) const = default;

   private:
    std::size_t       _n = 0;
    std::vector<bool> _bits;
  };

  //! Flags: meet.band, join.band and the four absorption identities
  //!   av(a^b) = a,  a^(avb) = a,  (a^b)vb = b,  (avb)^b = b.
  AxiomReport check_skew_lattice(SkewLatticeTable const& s);

  //! a <=_L b iff a = a^b;  a <=_R b iff a = b^a;
  //! a >=_L b iff a = avb;  a >=_R b iff a = bva.
  struct PreorderPair {
    Relation le_left;
    Relation le_right;
    Relation ge_left;
    Relation ge_right;
  };

  //! Computes the four relations from the definitions. Throws
  //! Error(axiom_violation) if <=_L is not the converse of >=_R or <=_R not
  //! the converse of >=_L, which cannot happen for a skew lattice.
  PreorderPair natural_preorders(SkewLatticeTable const& s);

  struct GreensPair {
    //! Classes sorted by least element, each class sorted.
    std::vector<std::vector<Index>> r_classes;
    std::vector<std::vector<Index>> l_classes;
    std::vector<Index>              r_class_of;
    std::vector<Index>              l_class_of;

    bool r_related(Index a, Index b) const noexcept {
      return r_class_of[static_cast<std::size_t>(a)]
             == r_class_of[static_cast<std::size_t>(b)];
    }
    bool l_related(Index a, Index b) const noexcept {
      return l_class_of[static_cast<std::size_t>(a)]
             == l_class_of[static_cast<std::size_t>(b)];
    }
  };

  //! R and L via the principal ideals aS^1 and S^1a. Throws
  //! Error(malformed_input) if t is not associative.
  GreensPair greens_relations(OperationTable const& t);

}  // namespace skewind

#endif  // SKEWIND_RELATIONS_HPP_
