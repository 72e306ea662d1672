#ifndef SKEWIND_GROUPOID_HPP_
#define SKEWIND_GROUPOID_HPP_

// Finite groupoids: small categories in which every morphism is
// invertible. Morphisms carry explicit ids; composition is a partial
// table with `undefined` where cod(f) != dom(g).

#include <cstddef>
#include <vector>

#include "report.hpp"
#include "tables.hpp"

namespace skewind {

  struct Morphism {
    Index dom = 0;
    Index cod = 0;
    bool  operator==(Morphism const&) const = default;
  };

  class FiniteGroupoid {
   public:
    FiniteGroupoid() = default;

    //! identity_of may be empty, in which case it is derived: the identity
    //! at a is the morphism a -> a with comp(f, f) = f (undefined if none).
    //! Throws Error(malformed_input) on inconsistent sizes or indices out
    //! of range; the groupoid laws themselves are checked by
    //! check_groupoid, not here.
    FiniteGroupoid(std::size_t           object_count,
                   std::vector<Morphism> morphisms,
                   PartialTable          comp,
                   std::vector<Index>    inv,
                   std::vector<Index>    identity_of = {});

    std::size_t object_count() const noexcept {
      return _object_count;
    }
    std::size_t morphism_count() const noexcept {
      return _morphisms.size();
    }
    std::vector<Morphism> const& morphisms() const noexcept {
      return _morphisms;
    }
    Index dom(Index f) const noexcept {
      return _morphisms[static_cast<std::size_t>(f)].dom;
    }
    Index cod(Index f) const noexcept {
      return _morphisms[static_cast<std::size_t>(f)].cod;
    }
    //! The raw table entry, possibly `undefined`.
    Index comp(Index f, Index g) const noexcept {
      return _comp(static_cast<std::size_t>(f), static_cast<std::size_t>(g));
    }
    PartialTable const& comp_table() const noexcept {
      return _comp;
    }
    Index inv(Index f) const noexcept {
      return _inv[static_cast<std::size_t>(f)];
    }
    std::vector<Index> const& inv_table() const noexcept {
      return _inv;
    }
    Index identity_of(Index a) const noexcept {
      return _identity_of[static_cast<std::size_t>(a)];
    }
    std::vector<Index> const& identities() const noexcept {
      return _identity_of;
    }
    bool is_identity(Index f) const noexcept {
      return dom(f) == cod(f) && identity_of(dom(f)) == f;
    }

    //! Mutable access for mutation testing and fixture construction.
    PartialTable& comp_table_mut() noexcept {
      return _comp;
    }
    std::vector<Index>& inv_table_mut() noexcept {
      return _inv;
    }

    //! One object; the morphisms are the group elements.
    static FiniteGroupoid from_group(GroupTable const& g);
    //! Identities only.
    static FiniteGroupoid discrete(std::size_t object_count);

   private:
    std::size_t           _object_count = 0;
    std::vector<Morphism> _morphisms;
    PartialTable          _comp;
    std::vector<Index>    _inv;
    std::vector<Index>    _identity_of;
  };

  //! Flags: composition.domain, associativity, identities, inverses,
  //! idempotents_are_identities.
  AxiomReport check_groupoid(FiniteGroupoid const& g);

  //! Throws Error(undefined_composition) when cod(f) != dom(h).
  Index compose(FiniteGroupoid const& g, Index f, Index h);
  Index invert(FiniteGroupoid const& g, Index f);

}  // namespace skewind

#endif  // SKEWIND_GROUPOID_HPP_
