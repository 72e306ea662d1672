#include "skewind/reconstruction.hpp"

#include <optional>
#include <string>

#include "skewind/error.hpp"

namespace skewind {

  namespace {

    std::string first_failure_text(AxiomReport const& r) {
      auto const* f = r.first_failure();
      if (f == nullptr) {
        return {};
      }
      std::string w;
      for (Index x : f->witness) {
        w += (w.empty() ? "" : ",") + std::to_string(x);
      }
      return r.title() + "." + f->name + " fails at (" + f->roles + ") = ("
             + w + ")";
    }

    std::string pair_text(Index a, Index b) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }

    // Maps an index through m, keeping undefined.
    Index through(Isomorphism const& m, Index x) {
      return x == undefined ? undefined : m(x);
    }

    // First place where iso fails to carry a onto b, or nullopt.
    std::optional<std::string> system_mismatch(RestrictionSystem const& a,
                                               RestrictionSystem const& b,
                                               SystemIsomorphism const& iso) {
      auto const n = a.object_count();
      auto const m = a.morphism_count();
      auto const& O = iso.objects;
      auto const& M = iso.morphisms;
      if (b.object_count() != n || b.morphism_count() != m
          || O.map.size() != n || M.map.size() != m) {
        return "sizes differ";
      }
      auto bijective = [](Isomorphism const& f, std::size_t k) {
        std::vector<bool> seen(k, false);
        for (Index x : f.map) {
          if (x < 0 || static_cast<std::size_t>(x) >= k
              || seen[static_cast<std::size_t>(x)]) {
            return false;
          }
          seen[static_cast<std::size_t>(x)] = true;
        }
        return true;
      };
      if (!bijective(O, n) || !bijective(M, m)) {
        return "maps are not bijections";
      }
      auto const ni = static_cast<Index>(n);
      auto const mi = static_cast<Index>(m);
      for (Index g = 0; g < mi; ++g) {
        if (b.dom(M(g)) != O(a.dom(g)) || b.cod(M(g)) != O(a.cod(g))) {
          return "endpoints of morphism " + std::to_string(g);
        }
        if (b.groupoid.inv(M(g)) != M(a.groupoid.inv(g))) {
          return "inverse of morphism " + std::to_string(g);
        }
        for (Index h = 0; h < mi; ++h) {
          if (b.groupoid.comp(M(g), M(h)) != through(M, a.groupoid.comp(g, h))) {
            return "composition at " + pair_text(g, h);
          }
        }
      }
      for (Index x = 0; x < ni; ++x) {
        if (b.identity(O(x)) != M(a.identity(x))) {
          return "identity at object " + std::to_string(x);
        }
        for (Index y = 0; y < ni; ++y) {
          if (b.objects.meet(O(x), O(y)) != O(a.objects.meet(x, y))
              || b.objects.join(O(x), O(y)) != O(a.objects.join(x, y))) {
            return "object operations at " + pair_text(x, y);
          }
        }
        auto const xs = static_cast<std::size_t>(x);
        auto const ox = static_cast<std::size_t>(O(x));
        for (Index g = 0; g < mi; ++g) {
          auto const gs = static_cast<std::size_t>(g);
          auto const mg = static_cast<std::size_t>(M(g));
          if (b.restrict_left(ox, mg) != through(M, a.restrict_left(xs, gs))) {
            return "restL at " + pair_text(x, g);
          }
          if (b.extend_left(ox, mg) != through(M, a.extend_left(xs, gs))) {
            return "extL at " + pair_text(x, g);
          }
          if (b.restrict_right(mg, ox) != through(M, a.restrict_right(gs, xs))) {
            return "restR at " + pair_text(g, x);
          }
          if (b.extend_right(mg, ox) != through(M, a.extend_right(gs, xs))) {
            return "extR at " + pair_text(g, x);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  ReconstructedGroupoid reconstruct(BiBandAlgebra const& S) {
    auto const report = check_axioms(S);
    if (!report.pass()) {
      throw Error(ErrorCode::axiom_violation, first_failure_text(report));
    }
    auto const n = static_cast<Index>(S.order());
    auto const& J = S.join;
    auto const& M = S.meet;

    ReconstructedGroupoid out;
    out.object_of_element.assign(S.order(), undefined);
    for (Index s = 0; s < n; ++s) {
      Index const e = J(s, S.inv(s));
      auto&       k = out.object_of_element[static_cast<std::size_t>(e)];
      if (k == undefined) {
        k = 0;  // marked; numbered below in element order
      }
    }
    for (Index s = 0; s < n; ++s) {
      auto& k = out.object_of_element[static_cast<std::size_t>(s)];
      if (k != undefined) {
        k = static_cast<Index>(out.object_element.size());
        out.object_element.push_back(s);
      }
    }
    auto obj = [&](Index e) {
      return out.object_of_element[static_cast<std::size_t>(e)];
    };
    auto const objects = static_cast<Index>(out.object_element.size());
    auto elem = [&](Index a) {
      return out.object_element[static_cast<std::size_t>(a)];
    };

    std::vector<Morphism> morphisms;
    std::vector<Index>    inv(S.order());
    PartialTable          comp(S.order(), S.order());
    for (Index s = 0; s < n; ++s) {
      morphisms.push_back({obj(J(s, S.inv(s))), obj(J(S.inv(s), s))});
      inv[static_cast<std::size_t>(s)] = S.inv(s);
    }
    for (Index s = 0; s < n; ++s) {
      for (Index t = 0; t < n; ++t) {
        if (morphisms[static_cast<std::size_t>(s)].cod
            != morphisms[static_cast<std::size_t>(t)].dom) {
          continue;
        }
        if (M(s, t) != J(s, t)) {
          throw Error(ErrorCode::composition_ambiguity,
                      "meet and join differ on composable pair "
                          + pair_text(s, t));
        }
        comp.at(static_cast<std::size_t>(s), static_cast<std::size_t>(t))
            = M(s, t);
      }
    }
    std::vector<Index> identity_of(static_cast<std::size_t>(objects));
    for (Index a = 0; a < objects; ++a) {
      identity_of[static_cast<std::size_t>(a)] = elem(a);
    }

    SkewLatticeTable lattice{
        OperationTable::from_function(
            static_cast<std::size_t>(objects),
            [&](Index a, Index b) { return obj(M(elem(a), elem(b))); }),
        OperationTable::from_function(
            static_cast<std::size_t>(objects),
            [&](Index a, Index b) { return obj(J(elem(a), elem(b))); })};
    for (Index x : lattice.meet.cells()) {
      if (x == undefined) {
        throw Error(ErrorCode::skeleton_not_closed, "objects not closed under meet");
      }
    }
    for (Index x : lattice.join.cells()) {
      if (x == undefined) {
        throw Error(ErrorCode::skeleton_not_closed, "objects not closed under join");
      }
    }

    auto const no = static_cast<std::size_t>(objects);
    auto const nm = S.order();
    PartialTable rl(no, nm), el(no, nm), rr(nm, no), er(nm, no);
    for (Index a = 0; a < objects; ++a) {
      Index const x = elem(a);
      for (Index s = 0; s < n; ++s) {
        Index const d = J(s, S.inv(s));
        Index const r = J(S.inv(s), s);
        auto const  ai = static_cast<std::size_t>(a);
        auto const  si = static_cast<std::size_t>(s);
        if (x == M(x, d)) {  // x <=_L d
          rl.at(ai, si) = M(x, s);
        }
        if (x == J(x, d)) {  // x >=_L d
          el.at(ai, si) = J(x, s);
        }
        if (x == M(r, x)) {  // x <=_R r
          rr.at(si, ai) = M(s, x);
        }
        if (x == J(r, x)) {  // x >=_R r
          er.at(si, ai) = J(s, x);
        }
      }
    }

    out.system = RestrictionSystem{
        FiniteGroupoid(no, std::move(morphisms), std::move(comp), std::move(inv),
                       std::move(identity_of)),
        std::move(lattice), std::move(rl), std::move(rr), std::move(el),
        std::move(er)};
    return out;
  }

  bool verify_system_isomorphism(RestrictionSystem const& a,
                                 RestrictionSystem const& b,
                                 SystemIsomorphism const& iso) {
    return !system_mismatch(a, b, iso).has_value();
  }

  SystemIsomorphism roundtrip_groupoid(RestrictionSystem const& sys) {
    auto const g = SkewInductiveGroupoid::verify(sys);
    auto const A = build_algebra(g);
    ReconstructedGroupoid R;
    try {
      R = reconstruct(A.algebra);
    } catch (Error const& e) {
      throw Error(ErrorCode::roundtrip_failure,
                  std::string("built algebra does not reconstruct: ") + e.what());
    }
    auto const  n = sys.object_count();
    Isomorphism objects{n, R.object_element.size(), std::vector<Index>(n)};
    for (std::size_t a = 0; a < n; ++a) {
      Index const e = A.morphism_to_element(sys.identity(static_cast<Index>(a)));
      objects.map[a] = R.object_of_element[static_cast<std::size_t>(e)];
      if (objects.map[a] == undefined) {
        throw Error(ErrorCode::roundtrip_failure,
                    "identity of object " + std::to_string(a)
                        + " is not an object of the reconstruction");
      }
    }
    SystemIsomorphism iso{std::move(objects), A.morphism_to_element};
    if (auto why = system_mismatch(sys, R.system, iso)) {
      throw Error(ErrorCode::roundtrip_failure, "g -> (dg, g, rg) fails: " + *why);
    }
    return iso;
  }

  Isomorphism roundtrip_algebra(BiBandAlgebra const& S) {
    auto const R = reconstruct(S);
    GroupoidAlgebra B;
    try {
      B = build_algebra(R.system);
    } catch (Error const& e) {
      throw Error(ErrorCode::roundtrip_failure,
                  std::string("reconstruction is not a skew inductive groupoid: ")
                      + e.what());
    }
    auto const& T = B.algebra;
    auto const  n = static_cast<Index>(S.order());
    if (T.order() != S.order()) {
      throw Error(ErrorCode::roundtrip_failure, "orders differ");
    }
    for (Index s = 0; s < n; ++s) {
      if (T.inv(s) != S.inv(s)) {
        throw Error(ErrorCode::roundtrip_failure,
                    "star differs at " + std::to_string(s));
      }
      for (Index t = 0; t < n; ++t) {
        if (T.meet(s, t) != S.meet(s, t)) {
          throw Error(ErrorCode::roundtrip_failure,
                      "meet differs at " + pair_text(s, t));
        }
        if (T.join(s, t) != S.join(s, t)) {
          throw Error(ErrorCode::roundtrip_failure,
                      "join differs at " + pair_text(s, t));
        }
      }
    }
    return B.morphism_to_element;
  }

}  // namespace skewind
