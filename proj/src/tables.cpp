#include "skewind/tables.hpp"

#include <string>

#include "skewind/error.hpp"

namespace skewind {

  namespace {
    std::vector<std::vector<Index>> rows_of(std::vector<Index> const& cells,
                                            std::size_t               rows,
                                            std::size_t               cols) {
      std::vector<std::vector<Index>> out(rows, std::vector<Index>(cols));
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          out[i][j] = cells[i * cols + j];
        }
      }
      return out;
    }
  }  // namespace

  PartialTable::PartialTable(std::vector<std::vector<Index>> const& rows)
      : _rows(rows.size()), _cols(rows.empty() ? 0 : rows.front().size()) {
    _cells.reserve(_rows * _cols);
    for (auto const& row : rows) {
      if (row.size() != _cols) {
        throw Error(ErrorCode::malformed_input, "partial table is ragged");
      }
      for (Index x : row) {
        if (x < undefined) {
          throw Error(ErrorCode::malformed_input,
                      "partial table entry " + std::to_string(x)
                          + " is below the sentinel -1");
        }
        _cells.push_back(x);
      }
    }
  }

  std::vector<std::vector<Index>> PartialTable::to_rows() const {
    return rows_of(_cells, _rows, _cols);
  }

  OperationTable::OperationTable(std::size_t order)
      : _order(order), _cells(order * order, 0) {}

  OperationTable::OperationTable(std::vector<std::vector<Index>> const& rows)
      : _order(rows.size()) {
    if (_order == 0) {
      throw Error(ErrorCode::malformed_input, "operation table is empty");
    }
    _cells.reserve(_order * _order);
    for (auto const& row : rows) {
      if (row.size() != _order) {
        throw Error(ErrorCode::malformed_input,
                    "operation table is not square");
      }
      for (Index x : row) {
        if (x < 0 || static_cast<std::size_t>(x) >= _order) {
          throw Error(ErrorCode::malformed_input,
                      "operation table entry " + std::to_string(x)
                          + " out of range for order "
                          + std::to_string(_order));
        }
        _cells.push_back(x);
      }
    }
  }

  std::vector<std::vector<Index>> OperationTable::to_rows() const {
    return rows_of(_cells, _order, _order);
  }

  PartialTable OperationTable::to_partial() const {
    PartialTable p(_order, _order);
    for (std::size_t i = 0; i < _order; ++i) {
      for (std::size_t j = 0; j < _order; ++j) {
        p.at(i, j) = _cells[i * _order + j];
      }
    }
    return p;
  }

  OperationTable OperationTable::relabel(std::vector<Index> const& perm) const {
    OperationTable out(_order);
    for (std::size_t i = 0; i < _order; ++i) {
      for (std::size_t j = 0; j < _order; ++j) {
        out.at(static_cast<std::size_t>(perm[i]),
               static_cast<std::size_t>(perm[j]))
            = perm[static_cast<std::size_t>(_cells[i * _order + j])];
      }
    }
    return out;
  }

  std::optional<std::vector<Index>> associativity_witness(
      OperationTable const& t) {
    auto const n = static_cast<Index>(t.order());
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        Index const ij = t(i, j);
        for (Index k = 0; k < n; ++k) {
          if (t(ij, k) != t(i, t(j, k))) {
            return std::vector<Index>{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool check_associative(OperationTable const& t) {
    return !associativity_witness(t).has_value();
  }

  bool check_idempotent(OperationTable const& t) {
    auto const n = static_cast<Index>(t.order());
    for (Index i = 0; i < n; ++i) {
      if (t(i, i) != i) {
        return false;
      }
    }
    return true;
  }

  bool check_commutative(OperationTable const& t) {
    auto const n = static_cast<Index>(t.order());
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        if (t(i, j) != t(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  GroupTable GroupTable::from_table(OperationTable t) {
    auto const n = static_cast<Index>(t.order());
    if (!check_associative(t)) {
      throw Error(ErrorCode::malformed_input, "group table not associative");
    }
    Index e = undefined;
    for (Index x = 0; x < n && e == undefined; ++x) {
      bool ok = true;
      for (Index y = 0; y < n && ok; ++y) {
        ok = t(x, y) == y && t(y, x) == y;
      }
      if (ok) {
        e = x;
      }
    }
    if (e == undefined) {
      throw Error(ErrorCode::malformed_input, "group table has no identity");
    }
    GroupTable g;
    g._inverse.assign(t.order(), undefined);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (t(x, y) == e && t(y, x) == e) {
          g._inverse[static_cast<std::size_t>(x)] = y;
          break;
        }
      }
      if (g._inverse[static_cast<std::size_t>(x)] == undefined) {
        throw Error(ErrorCode::malformed_input,
                    "element " + std::to_string(x) + " has no inverse");
      }
    }
    g._table    = std::move(t);
    g._identity = e;
    return g;
  }

  namespace tables {
    OperationTable left_zero(std::size_t n) {
      return OperationTable::from_function(n, [](Index x, Index) { return x; });
    }
    OperationTable right_zero(std::size_t n) {
      return OperationTable::from_function(n, [](Index, Index y) { return y; });
    }
    OperationTable chain_meet(std::size_t n) {
      return OperationTable::from_function(
          n, [](Index x, Index y) { return x < y ? x : y; });
    }
    OperationTable chain_join(std::size_t n) {
      return OperationTable::from_function(
          n, [](Index x, Index y) { return x < y ? y : x; });
    }
    OperationTable cyclic_group(std::size_t n) {
      auto const m = static_cast<Index>(n);
      return OperationTable::from_function(
          n, [m](Index x, Index y) { return (x + y) % m; });
    }
  }  // namespace tables

}  // namespace skewind
