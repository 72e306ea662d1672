#include "skewind/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "skewind/error.hpp"
#include "skewind/relations.hpp"

namespace skewind {

  namespace {
    void check_bound(std::size_t n, std::size_t bound) {
      if (n == 0) {
        throw Error(ErrorCode::bound_exceeded, "order must be positive");
      }
      if (n > bound || n > max_enumeration_order) {
        throw Error(ErrorCode::bound_exceeded,
                    "order " + std::to_string(n) + " exceeds the bound "
                        + std::to_string(std::min(bound, max_enumeration_order)));
      }
    }

    // A square table under construction; `undefined` marks open cells.
    class Draft {
     public:
      explicit Draft(std::size_t n) : _n(n), _t(n, n) {
        for (std::size_t i = 0; i < n; ++i) {
          _t.at(i, i) = static_cast<Index>(i);
        }
      }

      Index get(Index i, Index j) const {
        return _t(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
      Index& cell(std::size_t i, std::size_t j) {
        return _t.at(i, j);
      }

      // No triple with all four products defined violates associativity.
      bool consistent() const {
        auto const n = static_cast<Index>(_n);
        for (Index i = 0; i < n; ++i) {
          for (Index j = 0; j < n; ++j) {
            Index const ij = get(i, j);
            if (ij == undefined) {
              continue;
            }
            for (Index k = 0; k < n; ++k) {
              Index const jk = get(j, k);
              if (jk == undefined) {
                continue;
              }
              Index const l = get(ij, k);
              Index const r = get(i, jk);
              if (l != undefined && r != undefined && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      OperationTable finish() const {
        return OperationTable::from_function(
            _n, [this](Index i, Index j) { return get(i, j); });
      }

     private:
      std::size_t  _n;
      PartialTable _t;
    };

    // Fills the open cells of draft in row-major order; accept(draft, i, j)
    // is an extra constraint checked after writing cell (i, j).
    template <typename Accept, typename Emit>
    void fill(Draft&                                          draft,
              std::vector<std::pair<std::size_t, std::size_t>> const& open,
              std::size_t                                     pos,
              std::size_t                                     n,
              Accept const&                                   accept,
              Emit const&                                     emit) {
      if (pos == open.size()) {
        emit(draft.finish());
        return;
      }
      auto [i, j] = open[pos];
      for (std::size_t v = 0; v < n; ++v) {
        draft.cell(i, j) = static_cast<Index>(v);
        if (accept(draft, i, j) && draft.consistent()) {
          fill(draft, open, pos + 1, n, accept, emit);
        }
      }
      draft.cell(i, j) = undefined;
    }

    std::vector<std::pair<std::size_t, std::size_t>> open_cells(
        Draft const& d,
        std::size_t  n) {
      std::vector<std::pair<std::size_t, std::size_t>> open;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (d.get(static_cast<Index>(i), static_cast<Index>(j)) == undefined) {
            open.emplace_back(i, j);
          }
        }
      }
      return open;
    }
  }  // namespace

  std::vector<OperationTable> labelled_bands(std::size_t n) {
    std::vector<OperationTable> out;
    Draft                       draft(n);
    auto const                  open = open_cells(draft, n);
    fill(
        draft,
        open,
        0,
        n,
        [](Draft const&, std::size_t, std::size_t) { return true; },
        [&out](OperationTable t) { out.push_back(std::move(t)); });
    return out;
  }

  std::vector<OperationTable> enumerate_bands(std::size_t n,
                                              std::size_t bound) {
    check_bound(n, bound);
    std::set<OperationTable> classes;
    for (auto const& t : labelled_bands(n)) {
      classes.insert(canonical_form(t));
    }
    return {classes.begin(), classes.end()};
  }

  std::vector<SkewLatticeTable> enumerate_skew_lattices(std::size_t n,
                                                        std::size_t bound) {
    check_bound(n, bound);
    std::set<SkewLatticeTable> classes;
    // Every class has a member whose meet is a canonical band.
    for (auto const& meet : enumerate_bands(n, bound)) {
      Draft draft(n);
      bool  ok = true;
      // av(a^b) = a and (a^b)vb = b pin join cells directly.
      auto pin = [&](Index a, Index b, Index v) {
        Index& c = draft.cell(static_cast<std::size_t>(a),
                              static_cast<std::size_t>(b));
        if (c != undefined && c != v) {
          ok = false;
        }
        c = v;
      };
      auto const m = static_cast<Index>(n);
      for (Index a = 0; a < m; ++a) {
        for (Index b = 0; b < m; ++b) {
          pin(a, meet(a, b), a);
          pin(meet(a, b), b, b);
        }
      }
      if (!ok || !draft.consistent()) {
        continue;
      }
      auto accept = [&meet](Draft const& d, std::size_t i, std::size_t j) {
        auto const a  = static_cast<Index>(i);
        auto const b  = static_cast<Index>(j);
        Index const v = d.get(a, b);
        return meet(a, v) == a && meet(v, b) == b;
      };
      fill(draft, open_cells(draft, n), 0, n, accept,
           [&](OperationTable join) {
             SkewLatticeTable s{meet, std::move(join)};
             if (check_skew_lattice(s).pass()) {
               classes.insert(canonical_form(s));
             }
           });
    }
    return {classes.begin(), classes.end()};
  }

  std::vector<Isomorphism> band_automorphisms(SkewLatticeTable const& s) {
    return automorphisms(to_structure(s));
  }

}  // namespace skewind
