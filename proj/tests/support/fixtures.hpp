#ifndef SKEWIND_TESTS_FIXTURES_HPP_
#define SKEWIND_TESTS_FIXTURES_HPP_

#include <vector>

#include "oracles.hpp"
#include "skewind/models.hpp"
#include "skewind/tables.hpp"

namespace fixtures {

  using namespace skewind;

  inline oracle::Table rows(OperationTable const& t) {
    oracle::Table out;
    for (auto const& r : t.to_rows()) {
      out.emplace_back(r.begin(), r.end());
    }
    return out;
  }

  inline SkewLatticeTable lattice(std::size_t n) {
    return {tables::chain_meet(n), tables::chain_join(n)};
  }

  // Left-zero meet, right-zero join.
  inline SkewLatticeTable rectangular(std::size_t n) {
    return {tables::left_zero(n), tables::right_zero(n)};
  }

  inline GroupTable cyclic(std::size_t n) {
    return GroupTable::from_table(tables::cyclic_group(n));
  }

  // C2 acting on {0, 1} by swapping.
  inline GroupAction swap_action(SkewLatticeTable b) {
    return GroupAction{cyclic(2), std::move(b), {{0, 1}, {1, 0}}};
  }

  // Generated once per test binary.
  inline std::vector<ModelInstance> const& suite() {
    static std::vector<ModelInstance> const s = generate_model_suite({6, 4});
    return s;
  }

  inline bool nontrivial(GroupAction const& a) {
    for (auto const& row : a.act) {
      for (Index x : row) {
        if (x != row.front()) {
          return true;
        }
      }
    }
    return false;
  }

  // The mutation target: S3 acting nontrivially on a skew lattice of
  // order at least 3.
  inline ModelInstance const& rich_instance() {
    for (auto const& m : suite()) {
      if (m.action.group.order() == 6 && m.action.lattice.order() >= 3
          && nontrivial(m.action)) {
        return m;
      }
    }
    return suite().back();
  }

}  // namespace fixtures

#endif  // SKEWIND_TESTS_FIXTURES_HPP_
