#ifndef SKEWIND_TABLES_HPP_
#define SKEWIND_TABLES_HPP_

// Finite operation tables and the predicates on them. Elements are the
// indices 0..n-1; tables are row-major with the row as left operand.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace skewind {

  using Index = std::int32_t;

  //! Sentinel for an undefined cell of a partial table.
  inline constexpr Index undefined = -1;

  //! A rows x cols table of indices in which cells may be undefined.
  class PartialTable {
   public:
    PartialTable() = default;
    PartialTable(std::size_t rows, std::size_t cols, Index fill = undefined)
        : _rows(rows), _cols(cols), _cells(rows * cols, fill) {}
    explicit PartialTable(std::vector<std::vector<Index>> const& rows);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Index operator()(std::size_t i, std::size_t j) const noexcept {
      return _cells[i * _cols + j];
    }
    Index& at(std::size_t i, std::size_t j) noexcept {
      return _cells[i * _cols + j];
    }
    bool defined(std::size_t i, std::size_t j) const noexcept {
      return (*this)(i, j) != undefined;
    }

    std::vector<Index> const& cells() const noexcept {
      return _cells;
    }
    std::vector<std::vector<Index>> to_rows() const;

    auto operator<=>(PartialTable const&) const = default;

   private:
    std::size_t        _rows = 0;
    std::size_t        _cols = 0;
    std::vector<Index> _cells;
  };

  //! A total binary operation on {0, ..., n - 1}.
  class OperationTable {
   public:
    OperationTable() = default;
    //! Every cell initialised to 0.
    explicit OperationTable(std::size_t order);
    //! Throws Error(malformed_input) unless square with entries in range.
    explicit OperationTable(std::vector<std::vector<Index>> const& rows);

    template <typename Op>
    static OperationTable from_function(std::size_t order, Op&& op) {
      OperationTable t(order);
      for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
          t.at(i, j) = static_cast<Index>(op(static_cast<Index>(i),
                                             static_cast<Index>(j)));
        }
      }
      return t;
    }

    std::size_t order() const noexcept {
      return _order;
    }
    Index operator()(Index i, Index j) const noexcept {
      return _cells[static_cast<std::size_t>(i) * _order
                    + static_cast<std::size_t>(j)];
    }
    Index& at(std::size_t i, std::size_t j) noexcept {
      return _cells[i * _order + j];
    }
    std::vector<Index> const& cells() const noexcept {
      return _cells;
    }
    std::vector<std::vector<Index>> to_rows() const;
    PartialTable                    to_partial() const;

    //! The table obtained by renaming element x to perm[x].
    OperationTable relabel(std::vector<Index> const& perm) const;

    auto operator<=>(OperationTable const&) const = default;

   private:
    std::size_t        _order = 0;
    std::vector<Index> _cells;
  };

  bool check_associative(OperationTable const& t);
  bool check_idempotent(OperationTable const& t);
  bool check_commutative(OperationTable const& t);

  //! First triple (i, j, k) with (ij)k != i(jk).
  std::optional<std::vector<Index>> associativity_witness(
      OperationTable const& t);

  //! A pair of bands on the same carrier; see check_skew_lattice.
  struct SkewLatticeTable {
    OperationTable meet;
    OperationTable join;

    std::size_t order() const noexcept {
      return meet.order();
    }
    OperationTable const& op(bool meet_op) const noexcept {
      return meet_op ? meet : join;
    }
    SkewLatticeTable relabel(std::vector<Index> const& perm) const {
      return {meet.relabel(perm), join.relabel(perm)};
    }
    auto operator<=>(SkewLatticeTable const&) const = default;
  };

  //! A group given by its Cayley table; construct with from_table.
  class GroupTable {
   public:
    //! Throws Error(malformed_input) if t is not a group.
    static GroupTable from_table(OperationTable t);

    std::size_t order() const noexcept {
      return _table.order();
    }
    OperationTable const& table() const noexcept {
      return _table;
    }
    Index identity() const noexcept {
      return _identity;
    }
    Index inverse(Index u) const noexcept {
      return _inverse[static_cast<std::size_t>(u)];
    }
    Index operator()(Index u, Index v) const noexcept {
      return _table(u, v);
    }

   private:
    OperationTable     _table;
    Index              _identity = 0;
    std::vector<Index> _inverse;
  };

  //! Well-known tables used throughout the tests and the model catalog.
  namespace tables {
    OperationTable left_zero(std::size_t n);
    OperationTable right_zero(std::size_t n);
    //! The chain 0 < 1 < ... < n - 1 with meet = min.
    OperationTable chain_meet(std::size_t n);
    OperationTable chain_join(std::size_t n);
    OperationTable cyclic_group(std::size_t n);
  }  // namespace tables

}  // namespace skewind

#endif  // SKEWIND_TABLES_HPP_
