#ifndef SKEWIND_SRC_IDENTITIES_HPP_
#define SKEWIND_SRC_IDENTITIES_HPP_

// Identities shared by the algebra checker and the groupoid-side derived
// checks. Values are optional so that partially defined products (from a
// corrupted system) fail a flag instead of aborting the check.

#include <cstddef>
#include <optional>
#include <string>

#include "skewind/report.hpp"

namespace skewind::detail {

  using Value = std::optional<Index>;

  inline bool same(Value a, Value b) {
    return a && b && *a == *b;
  }

  // s+ = s o s*, s- = s* o s; adds prefix + "i" ... prefix + "v".
  template <typename Mul, typename Star>
  void plus_minus_identities(AxiomReport&       report,
                             std::string const& prefix,
                             std::size_t        order,
                             Mul const&         mul,
                             Star const&        star) {
    auto plus  = [&](Value s) { return mul(s, star(s)); };
    auto minus = [&](Value s) { return mul(star(s), s); };

    auto& f1 = report.add(prefix + "i", "s");
    auto& f2 = report.add(prefix + "ii", "s");
    auto& f3 = report.add(prefix + "iii", "s");
    auto& f4 = report.add(prefix + "iv", "s,t");
    auto& f5 = report.add(prefix + "v", "s,t");
    auto const n = static_cast<Index>(order);
    for (Index i = 0; i < n; ++i) {
      Value const s = i;
      Value const p = plus(s);
      Value const q = minus(s);
      require(f1,
              same(mul(p, p), p) && same(plus(p), p) && same(minus(p), p)
                  && same(mul(q, q), q) && same(minus(q), q)
                  && same(plus(q), q),
              {i});
      require(f2, same(mul(p, s), s) && same(mul(s, q), s), {i});
      if (same(mul(s, s), s)) {
        require(f3, same(p, s) && same(q, s), {i});
      }
      for (Index j = 0; j < n; ++j) {
        Value const t = j;
        require(f4,
                same(plus(mul(s, t)), plus(mul(s, plus(t))))
                    && same(minus(mul(s, t)), minus(mul(minus(s), t))),
                {i, j});
        require(f5,
                same(plus(mul(p, t)), mul(p, plus(t)))
                    && same(minus(mul(s, minus(t))), mul(q, minus(t))),
                {i, j});
      }
    }
  }

}  // namespace skewind::detail

#endif  // SKEWIND_SRC_IDENTITIES_HPP_
