#include "skewind/algebra.hpp"

#include <algorithm>
#include <string>

#include "identities.hpp"
#include "skewind/error.hpp"
#include "skewind/relations.hpp"

namespace skewind {

  using detail::require;

  char const* to_string(BandOp op) noexcept {
    return op == BandOp::meet ? "meet" : "join";
  }

  BiBandAlgebra BiBandAlgebra::from_tables(OperationTable     join,
                                           OperationTable     meet,
                                           std::vector<Index> star) {
    auto const n = meet.order();
    if (join.order() != n || star.size() != n) {
      throw Error(ErrorCode::malformed_input,
                  "join, meet and star must have the same order");
    }
    for (Index x : star) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw Error(ErrorCode::malformed_input, "star entry out of range");
      }
    }
    return BiBandAlgebra{std::move(join), std::move(meet), std::move(star)};
  }

  BiBandAlgebra BiBandAlgebra::from_skew_lattice(SkewLatticeTable const& b) {
    std::vector<Index> star(b.order());
    for (std::size_t i = 0; i < star.size(); ++i) {
      star[i] = static_cast<Index>(i);
    }
    return from_tables(b.join, b.meet, std::move(star));
  }

  BiBandAlgebra BiBandAlgebra::from_group(GroupTable const& g) {
    std::vector<Index> star(g.order());
    for (std::size_t i = 0; i < star.size(); ++i) {
      star[i] = g.inverse(static_cast<Index>(i));
    }
    return from_tables(g.table(), g.table(), std::move(star));
  }

  AxiomReport check_axioms(BiBandAlgebra const& S) {
    AxiomReport report("axioms");
    auto const  n = static_cast<Index>(S.order());
    auto const& J = S.join;
    auto const& M = S.meet;
    auto        st = [&](Index s) { return S.inv(s); };

    auto assoc = [&](OperationTable const& t, Flag& f) {
      if (auto w = associativity_witness(t)) {
        detail::fail(f, *w);
      }
    };
    assoc(M, report.add("i.meet", "s,t,u"));
    assoc(J, report.add("i.join", "s,t,u"));

    auto& ii    = report.add("ii", "s");
    auto& iii   = report.add("iii", "s");
    auto& iv    = report.add("iv", "s");
    auto& v_m   = report.add("v.meet", "s");
    auto& v_j   = report.add("v.join", "s");
    auto& vi_a  = report.add("vi.a", "s,t");
    auto& vi_b  = report.add("vi.b", "s,t");
    auto& vi_c  = report.add("vi.c", "s,t");
    auto& vi_d  = report.add("vi.d", "s,t");
    auto& vii_a = report.add("vii.a", "s,t");
    auto& vii_b = report.add("vii.b", "s,t");
    auto& vii_c = report.add("vii.c", "s,t");
    auto& vii_d = report.add("vii.d", "s,t");
    auto& viiij = report.add("viii.join", "s,t");
    auto& viiim = report.add("viii.meet", "s,t");

    for (Index s = 0; s < n; ++s) {
      require(ii, st(st(s)) == s, {s});
      require(iii, J(s, st(s)) == M(s, st(s)) && st(M(s, st(s))) == M(s, st(s)),
              {s});
      require(iv, J(J(s, st(s)), s) == s && M(M(s, st(s)), s) == s, {s});
      if (M(s, s) == s) {
        require(v_m, st(s) == s, {s});
      }
      if (J(s, s) == s) {
        require(v_j, st(s) == s, {s});
      }
    }
    for (Index s = 0; s < n; ++s) {
      Index const ss = J(s, st(s));  // = M(s, s*) when iii holds
      Index const s_s = J(st(s), s);
      for (Index t = 0; t < n; ++t) {
        Index const tt  = J(t, st(t));
        Index const t_t = J(st(t), t);
        require(vi_a, J(ss, M(s, t_t)) == s, {s, t});
        require(vi_b, M(ss, J(s, t_t)) == s, {s, t});
        require(vi_c, J(M(tt, s), s_s) == s, {s, t});
        require(vi_d, M(J(tt, s), s_s) == s, {s, t});

        auto seven = [&](OperationTable const& o, Flag& left, Flag& right) {
          Index const p = o(o(s, st(s)), t);
          require(left, o(o(s, st(s)), o(t, st(t))) == o(p, st(p)), {s, t});
          Index const q = o(t, o(st(s), s));
          require(right, o(o(st(t), t), o(st(s), s)) == o(st(q), q), {s, t});
        };
        seven(J, vii_a, vii_b);
        seven(M, vii_c, vii_d);

        auto eight = [&](OperationTable const& o, Flag& f) {
          if (o(st(s), s) != o(t, st(t))) {
            return;
          }
          Index const p = o(s, t);
          require(f,
                  o(p, st(p)) == o(s, st(s)) && o(st(p), p) == o(st(t), t),
                  {s, t});
        };
        eight(J, viiij);
        eight(M, viiim);
      }
    }
    return report;
  }

  Skeleton idempotent_skeleton(BiBandAlgebra const& S) {
    auto const         n = static_cast<Index>(S.order());
    std::vector<Index> e;
    for (Index s = 0; s < n; ++s) {
      bool const m = S.meet(s, s) == s;
      if (m != (S.join(s, s) == s)) {
        throw Error(ErrorCode::skeleton_not_closed,
                    "element " + std::to_string(s)
                        + " is idempotent for one operation only");
      }
      if (m) {
        e.push_back(s);
      }
    }
    std::vector<Index> index_of(S.order(), undefined);
    for (std::size_t i = 0; i < e.size(); ++i) {
      index_of[static_cast<std::size_t>(e[i])] = static_cast<Index>(i);
    }
    auto restrict = [&](OperationTable const& t, char const* name) {
      return OperationTable::from_function(e.size(), [&](Index i, Index j) {
        Index const x = t(e[static_cast<std::size_t>(i)],
                          e[static_cast<std::size_t>(j)]);
        Index const k = index_of[static_cast<std::size_t>(x)];
        if (k == undefined) {
          throw Error(ErrorCode::skeleton_not_closed,
                      std::string("idempotents not closed under ") + name);
        }
        return k;
      });
    };
    SkewLatticeTable lattice{restrict(S.meet, "meet"), restrict(S.join, "join")};
    if (auto const* f = check_skew_lattice(lattice).first_failure()) {
      throw Error(ErrorCode::skeleton_not_closed,
                  "idempotents are not a skew lattice: " + f->name);
    }
    return Skeleton{std::move(lattice), std::move(e)};
  }

  std::vector<Index> inverses_of(OperationTable const& op, Index s) {
    std::vector<Index> out;
    auto const         n = static_cast<Index>(op.order());
    for (Index t = 0; t < n; ++t) {
      if (op(op(s, t), s) == s && op(op(t, s), t) == t) {
        out.push_back(t);
      }
    }
    return out;
  }

  bool is_inverse_semigroup(OperationTable const& op) {
    auto const n = static_cast<Index>(op.order());
    for (Index s = 0; s < n; ++s) {
      if (inverses_of(op, s).size() != 1) {
        return false;
      }
    }
    return true;
  }

  namespace {
    PlusMinus plus_minus_with(BiBandAlgebra const& S,
                              Index                s,
                              BandOp               op,
                              GreensPair const&    g) {
      auto const& o = S.op(op);
      PlusMinus   out;
      out.plus  = o(s, S.inv(s));
      out.minus = o(S.inv(s), s);
      out.plus_r_s_l_minus
          = g.r_related(out.plus, s) && g.l_related(s, out.minus);
      std::vector<Index> inv;
      for (Index t : inverses_of(o, s)) {
        if (g.l_related(out.plus, t) && g.r_related(t, out.minus)) {
          inv.push_back(t);
        }
      }
      out.star_unique_inverse = inv.size() == 1 && inv.front() == S.inv(s);
      return out;
    }
  }  // namespace

  PlusMinus plus_minus(BiBandAlgebra const& S, Index s, BandOp op) {
    return plus_minus_with(S, s, op, greens_relations(S.op(op)));
  }

  AxiomReport check_skehr(BiBandAlgebra const& S) {
    AxiomReport report("plus-minus");
    auto const  n = static_cast<Index>(S.order());
    for (BandOp op : {BandOp::meet, BandOp::join}) {
      std::string const p = std::string(to_string(op)) + ".";
      auto const&       o = S.op(op);
      auto mul = [&](detail::Value a, detail::Value b) -> detail::Value {
        if (!a || !b) {
          return std::nullopt;
        }
        return o(*a, *b);
      };
      auto star = [&](detail::Value a) -> detail::Value {
        if (!a) {
          return std::nullopt;
        }
        return S.inv(*a);
      };
      detail::plus_minus_identities(report, p, S.order(), mul, star);

      // Green's relations only make sense for a semigroup.
      auto& assoc = report.add(p + "associativity", "s,t,u");
      if (auto w = associativity_witness(o)) {
        detail::fail(assoc, *w);
        continue;
      }
      auto& greens = report.add(p + "greens", "s");
      auto const g = greens_relations(o);
      for (Index s = 0; s < n; ++s) {
        auto const pm = plus_minus_with(S, s, op, g);
        require(greens, pm.plus_r_s_l_minus && pm.star_unique_inverse, {s});
      }
    }
    return report;
  }

  std::optional<AntiWitness> anti_automorphism_witness(BiBandAlgebra const& S) {
    auto const n = static_cast<Index>(S.order());
    for (BandOp op : {BandOp::meet, BandOp::join}) {
      for (Index s = 0; s < n; ++s) {
        for (Index t = 0; t < n; ++t) {
          if (S.inv(S(op, s, t)) != S(op, S.inv(t), S.inv(s))) {
            return AntiWitness{s, t, op};
          }
        }
      }
    }
    return std::nullopt;
  }

  Structure to_structure(BiBandAlgebra const& S) {
    return Structure{S.order(), {S.join.to_partial(), S.meet.to_partial()},
                     {S.star}};
  }

  std::optional<Isomorphism> find_isomorphism(BiBandAlgebra const& a,
                                              BiBandAlgebra const& b) {
    return find_isomorphism(to_structure(a), to_structure(b));
  }

}  // namespace skewind
