#ifndef SKEWIND_ISOMORPHISM_HPP_
#define SKEWIND_ISOMORPHISM_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tables.hpp"

namespace skewind {

  //! A finite single-sorted structure: partial binary operations (with
  //! `undefined` cells) and unary maps on {0, ..., order - 1}. Every other
  //! structure in the library is compared through this form.
  struct Structure {
    std::size_t                     order = 0;
    std::vector<PartialTable>       binary;
    std::vector<std::vector<Index>> unary;
  };

  Structure to_structure(OperationTable const& t);
  Structure to_structure(SkewLatticeTable const& s);

  //! A bijection from a source carrier onto a target carrier.
  struct Isomorphism {
    std::size_t        source_order = 0;
    std::size_t        target_order = 0;
    std::vector<Index> map;

    static Isomorphism identity(std::size_t n);

    Index operator()(Index x) const noexcept {
      return map[static_cast<std::size_t>(x)];
    }
    Isomorphism inverse() const;
    //! x -> next(this(x)).
    Isomorphism then(Isomorphism const& next) const;
    bool        is_identity() const noexcept;
    bool        operator==(Isomorphism const&) const = default;
  };

  //! True iff map is a bijection preserving every operation, with
  //! undefined cells sent to undefined cells.
  bool verify_isomorphism(Structure const& a,
                          Structure const& b,
                          Isomorphism const& map);

  //! Calls visit on every isomorphism a -> b in lexicographic order of the
  //! image sequence; stops early when visit returns false. Throws
  //! Error(signature_mismatch) if the operation counts differ.
  void for_each_isomorphism(Structure const&                         a,
                            Structure const&                         b,
                            std::function<bool(Isomorphism const&)> visit);

  //! The lexicographically first isomorphism, certified by
  //! verify_isomorphism, or nullopt.
  std::optional<Isomorphism> find_isomorphism(Structure const& a,
                                              Structure const& b);
  std::optional<Isomorphism> find_isomorphism(OperationTable const& a,
                                              OperationTable const& b);
  std::optional<Isomorphism> find_isomorphism(SkewLatticeTable const& a,
                                              SkewLatticeTable const& b);

  std::vector<Isomorphism> automorphisms(Structure const& s);

  //! Lexicographically least relabelling over all n! permutations.
  //! Throws Error(bound_exceeded) beyond canonical_form_limit.
  inline constexpr std::size_t canonical_form_limit = 8;
  OperationTable               canonical_form(OperationTable const& t);
  SkewLatticeTable             canonical_form(SkewLatticeTable const& s);

}  // namespace skewind

#endif  // SKEWIND_ISOMORPHISM_HPP_
