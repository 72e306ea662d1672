#include "skewind/relations.hpp"

#include <map>
#include <string>

#include "skewind/error.hpp"

namespace skewind {

  bool Relation::is_reflexive() const {
    for (std::size_t a = 0; a < _n; ++a) {
      if (!(*this)(static_cast<Index>(a), static_cast<Index>(a))) {
        return false;
      }
    }
    return true;
  }

  bool Relation::is_transitive() const {
    auto const n = static_cast<Index>(_n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (!(*this)(a, b)) {
          continue;
        }
        for (Index c = 0; c < n; ++c) {
          if ((*this)(b, c) && !(*this)(a, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Relation Relation::converse() const {
    Relation out(_n);
    auto const n = static_cast<Index>(_n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        out.set(b, a, (*this)(a, b));
      }
    }
    return out;
  }

  AxiomReport check_skew_lattice(SkewLatticeTable const& s) {
    AxiomReport report("skew-lattice");
    auto const& m = s.meet;
    auto const& j = s.join;
    auto const  n = static_cast<Index>(s.order());

    auto& shape = report.add("shape", "order");
    if (m.order() != j.order()) {
      detail::fail(shape, {static_cast<Index>(j.order())});
      return report;
    }

    auto band = [&](OperationTable const& t, Flag& f) {
      if (auto w = associativity_witness(t)) {
        detail::fail(f, *w);
        f.note = "not associative";
        return;
      }
      for (Index a = 0; a < n; ++a) {
        if (t(a, a) != a) {
          detail::fail(f, {a, a, a});
          f.note = "not idempotent";
          return;
        }
      }
    };
    band(m, report.add("meet.band", "x,y,z"));
    band(j, report.add("join.band", "x,y,z"));

    auto& a1 = report.add("absorption.join_meet_left", "a,b");  // av(a^b) = a
    auto& a2 = report.add("absorption.meet_join_left", "a,b");  // a^(avb) = a
    auto& a3 = report.add("absorption.join_meet_right", "a,b");  // (a^b)vb = b
    auto& a4 = report.add("absorption.meet_join_right", "a,b");  // (avb)^b = b
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        detail::require(a1, j(a, m(a, b)) == a, {a, b});
        detail::require(a2, m(a, j(a, b)) == a, {a, b});
        detail::require(a3, j(m(a, b), b) == b, {a, b});
        detail::require(a4, m(j(a, b), b) == b, {a, b});
      }
    }
    return report;
  }

  PreorderPair natural_preorders(SkewLatticeTable const& s) {
    auto const   n = static_cast<Index>(s.order());
    PreorderPair p{Relation(s.order()),
                   Relation(s.order()),
                   Relation(s.order()),
                   Relation(s.order())};
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        p.le_left.set(a, b, a == s.meet(a, b));
        p.le_right.set(a, b, a == s.meet(b, a));
        p.ge_left.set(a, b, a == s.join(a, b));
        p.ge_right.set(a, b, a == s.join(b, a));
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (p.le_left(a, b) != p.ge_right(b, a)
            || p.le_right(a, b) != p.ge_left(b, a)) {
          throw Error(ErrorCode::axiom_violation,
                      "natural preorders are not converse at (a,b) = ("
                          + std::to_string(a) + "," + std::to_string(b)
                          + ")");
        }
      }
    }
    return p;
  }

  namespace {
    void partition(std::vector<std::vector<bool>> const& ideals,
                   std::vector<std::vector<Index>>&       classes,
                   std::vector<Index>&                    class_of) {
      std::map<std::vector<bool>, Index> seen;
      class_of.assign(ideals.size(), undefined);
      for (std::size_t a = 0; a < ideals.size(); ++a) {
        auto [it, inserted]
            = seen.emplace(ideals[a], static_cast<Index>(classes.size()));
        if (inserted) {
          classes.emplace_back();
        }
        class_of[a] = it->second;
        classes[static_cast<std::size_t>(it->second)].push_back(
            static_cast<Index>(a));
      }
    }
  }  // namespace

  GreensPair greens_relations(OperationTable const& t) {
    if (!check_associative(t)) {
      throw Error(ErrorCode::malformed_input,
                  "Green's relations need an associative table");
    }
    auto const                     n = t.order();
    std::vector<std::vector<bool>> right(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> left(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      right[a][a] = true;
      left[a][a]  = true;
      for (std::size_t x = 0; x < n; ++x) {
        auto const ai = static_cast<Index>(a);
        auto const xi = static_cast<Index>(x);
        right[a][static_cast<std::size_t>(t(ai, xi))] = true;
        left[a][static_cast<std::size_t>(t(xi, ai))]  = true;
      }
    }
    GreensPair g;
    partition(right, g.r_classes, g.r_class_of);
    partition(left, g.l_classes, g.l_class_of);
    return g;
  }

}  // namespace skewind
