#include "skewind/groupoid.hpp"

#include <string>
#include <utility>

#include "skewind/error.hpp"

namespace skewind {

  FiniteGroupoid::FiniteGroupoid(std::size_t           object_count,
                                 std::vector<Morphism> morphisms,
                                 PartialTable          comp,
                                 std::vector<Index>    inv,
                                 std::vector<Index>    identity_of)
      : _object_count(object_count),
        _morphisms(std::move(morphisms)),
        _comp(std::move(comp)),
        _inv(std::move(inv)),
        _identity_of(std::move(identity_of)) {
    auto const m = _morphisms.size();
    auto in_range = [](Index x, std::size_t n) {
      return x >= 0 && static_cast<std::size_t>(x) < n;
    };
    for (auto const& f : _morphisms) {
      if (!in_range(f.dom, object_count) || !in_range(f.cod, object_count)) {
        throw Error(ErrorCode::malformed_input,
                    "morphism endpoint out of range");
      }
    }
    if (_comp.rows() != m || _comp.cols() != m) {
      throw Error(ErrorCode::malformed_input,
                  "composition table must be " + std::to_string(m) + " x "
                      + std::to_string(m));
    }
    for (Index x : _comp.cells()) {
      if (x != undefined && !in_range(x, m)) {
        throw Error(ErrorCode::malformed_input,
                    "composition entry out of range");
      }
    }
    if (_inv.size() != m) {
      throw Error(ErrorCode::malformed_input, "inverse table has wrong size");
    }
    for (Index x : _inv) {
      if (!in_range(x, m)) {
        throw Error(ErrorCode::malformed_input, "inverse entry out of range");
      }
    }
    if (_identity_of.empty()) {
      _identity_of.assign(object_count, undefined);
      for (std::size_t f = 0; f < m; ++f) {
        auto const fi = static_cast<Index>(f);
        auto const a  = static_cast<std::size_t>(_morphisms[f].dom);
        if (_morphisms[f].dom == _morphisms[f].cod && _comp(f, f) == fi
            && _identity_of[a] == undefined) {
          _identity_of[a] = fi;
        }
      }
    } else if (_identity_of.size() != object_count) {
      throw Error(ErrorCode::malformed_input, "identity table has wrong size");
    }
    for (Index x : _identity_of) {
      if (x != undefined && !in_range(x, m)) {
        throw Error(ErrorCode::malformed_input, "identity entry out of range");
      }
    }
  }

  FiniteGroupoid FiniteGroupoid::from_group(GroupTable const& g) {
    auto const            n = g.order();
    std::vector<Morphism> mor(n, Morphism{0, 0});
    std::vector<Index>    inv(n);
    for (std::size_t u = 0; u < n; ++u) {
      inv[u] = g.inverse(static_cast<Index>(u));
    }
    return FiniteGroupoid(1, std::move(mor), g.table().to_partial(),
                          std::move(inv), {g.identity()});
  }

  FiniteGroupoid FiniteGroupoid::discrete(std::size_t object_count) {
    std::vector<Morphism> mor;
    std::vector<Index>    inv, ids;
    PartialTable          comp(object_count, object_count);
    for (std::size_t a = 0; a < object_count; ++a) {
      auto const ai = static_cast<Index>(a);
      mor.push_back({ai, ai});
      inv.push_back(ai);
      ids.push_back(ai);
      comp.at(a, a) = ai;
    }
    return FiniteGroupoid(object_count, std::move(mor), std::move(comp),
                          std::move(inv), std::move(ids));
  }

  AxiomReport check_groupoid(FiniteGroupoid const& g) {
    AxiomReport report("groupoid");
    auto const  m = static_cast<Index>(g.morphism_count());

    auto& domain = report.add("composition.domain", "f,g");
    auto& assoc  = report.add("associativity", "f,g,h");
    auto& ids    = report.add("identities", "a|f");
    auto& inv    = report.add("inverses", "f");
    auto& idem   = report.add("idempotents_are_identities", "f");

    for (Index f = 0; f < m; ++f) {
      for (Index h = 0; h < m; ++h) {
        Index const fh         = g.comp(f, h);
        bool const  composable = g.cod(f) == g.dom(h);
        bool        ok         = composable == (fh != undefined);
        if (ok && fh != undefined) {
          ok = g.dom(fh) == g.dom(f) && g.cod(fh) == g.cod(h);
        }
        detail::require(domain, ok, {f, h});
      }
    }
    // Associativity wherever both sides are defined; definedness itself is
    // covered by composition.domain.
    for (Index f = 0; f < m && assoc.pass; ++f) {
      for (Index h = 0; h < m; ++h) {
        Index const fh = g.comp(f, h);
        if (fh == undefined) {
          continue;
        }
        for (Index k = 0; k < m; ++k) {
          Index const hk = g.comp(h, k);
          if (hk == undefined) {
            continue;
          }
          Index const l = g.comp(fh, k);
          Index const r = g.comp(f, hk);
          detail::require(assoc, l == r, {f, h, k});
        }
      }
    }
    for (Index a = 0; a < static_cast<Index>(g.object_count()); ++a) {
      Index const e = g.identity_of(a);
      if (e == undefined || g.dom(e) != a || g.cod(e) != a) {
        detail::fail(ids, {a, e});
        ids.note = "no identity at object";
      }
    }
    if (ids.pass) {
      for (Index f = 0; f < m; ++f) {
        bool const ok = g.comp(g.identity_of(g.dom(f)), f) == f
                        && g.comp(f, g.identity_of(g.cod(f))) == f;
        detail::require(ids, ok, {g.dom(f), f});
      }
    }
    for (Index f = 0; f < m; ++f) {
      Index const fi = g.inv(f);
      bool        ok = g.dom(fi) == g.cod(f) && g.cod(fi) == g.dom(f);
      if (ok && ids.pass) {
        ok = g.comp(f, fi) == g.identity_of(g.dom(f))
             && g.comp(fi, f) == g.identity_of(g.cod(f));
      }
      detail::require(inv, ok, {f});
    }
    for (Index f = 0; f < m; ++f) {
      bool const idempotent = g.comp(f, f) == f;
      detail::require(idem, idempotent == g.is_identity(f), {f});
    }
    return report;
  }

  Index compose(FiniteGroupoid const& g, Index f, Index h) {
    if (g.cod(f) != g.dom(h)) {
      throw Error(ErrorCode::undefined_composition,
                  "cannot compose " + std::to_string(f) + " with "
                      + std::to_string(h) + ": codomain "
                      + std::to_string(g.cod(f)) + " != domain "
                      + std::to_string(g.dom(h)));
    }
    Index const fh = g.comp(f, h);
    if (fh == undefined) {
      throw Error(ErrorCode::undefined_composition,
                  "composition table has no entry for composable pair ("
                      + std::to_string(f) + "," + std::to_string(h) + ")");
    }
    return fh;
  }

  Index invert(FiniteGroupoid const& g, Index f) {
    return g.inv(f);
  }

}  // namespace skewind
