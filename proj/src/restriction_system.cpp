#include "skewind/restriction_system.hpp"

#include <string>
#include <utility>

#include "identities.hpp"
#include "skewind/error.hpp"
#include "skewind/relations.hpp"

namespace skewind {

  using detail::require;
  using detail::same;
  using detail::Value;

  void validate_shape(RestrictionSystem const& sys) {
    auto const n = sys.object_count();
    auto const m = sys.morphism_count();
    if (sys.objects.order() != n || sys.objects.join.order() != n) {
      throw Error(ErrorCode::malformed_input,
                  "object skew lattice order " + std::to_string(sys.objects.order())
                      + " != object count " + std::to_string(n));
    }
    auto check = [](PartialTable const& t,
                    std::size_t         rows,
                    std::size_t         cols,
                    std::size_t         range,
                    char const*         name) {
      if (t.rows() != rows || t.cols() != cols) {
        throw Error(ErrorCode::malformed_input,
                    std::string(name) + " table must be " + std::to_string(rows)
                        + " x " + std::to_string(cols));
      }
      for (Index x : t.cells()) {
        if (x != undefined && (x < 0 || static_cast<std::size_t>(x) >= range)) {
          throw Error(ErrorCode::malformed_input,
                      std::string(name) + " entry out of range");
        }
      }
    };
    check(sys.restrict_left, n, m, m, "restL");
    check(sys.restrict_right, m, n, m, "restR");
    check(sys.extend_left, n, m, m, "extL");
    check(sys.extend_right, m, n, m, "extR");
  }

  namespace {

    // Evaluates terms over a possibly corrupted system; any undefined
    // sub-term makes the whole term undefined.
    class Eval {
     public:
      explicit Eval(RestrictionSystem const& s)
          : _s(s),
            n(static_cast<Index>(s.object_count())),
            m(static_cast<Index>(s.morphism_count())) {}

      RestrictionSystem const& _s;
      Index const              n;
      Index const              m;

      Value meet(Value a, Value b) const {
        return a && b ? Value(_s.objects.meet(*a, *b)) : std::nullopt;
      }
      Value join(Value a, Value b) const {
        return a && b ? Value(_s.objects.join(*a, *b)) : std::nullopt;
      }
      Value op(BandOp o, Value a, Value b) const {
        return o == BandOp::meet ? meet(a, b) : join(a, b);
      }
      bool le_left(Index a, Index b) const {
        return a == _s.objects.meet(a, b);
      }
      bool le_right(Index a, Index b) const {
        return a == _s.objects.meet(b, a);
      }
      bool ge_left(Index a, Index b) const {
        return a == _s.objects.join(a, b);
      }
      bool ge_right(Index a, Index b) const {
        return a == _s.objects.join(b, a);
      }

      Value dom(Value g) const {
        return g ? Value(_s.dom(*g)) : std::nullopt;
      }
      Value cod(Value g) const {
        return g ? Value(_s.cod(*g)) : std::nullopt;
      }
      Value inv(Value g) const {
        return g ? Value(_s.groupoid.inv(*g)) : std::nullopt;
      }
      Value id(Value a) const {
        if (!a) {
          return std::nullopt;
        }
        return cell(_s.groupoid.identity_of(*a));
      }
      Value comp(Value f, Value g) const {
        if (!f || !g || _s.cod(*f) != _s.dom(*g)) {
          return std::nullopt;
        }
        return cell(_s.groupoid.comp(*f, *g));
      }

      // raw table cells
      Value rl(Value a, Value g) const {
        return a && g ? cell(_s.restrict_left(u(*a), u(*g))) : std::nullopt;
      }
      Value rr(Value g, Value a) const {
        return a && g ? cell(_s.restrict_right(u(*g), u(*a))) : std::nullopt;
      }
      Value el(Value a, Value g) const {
        return a && g ? cell(_s.extend_left(u(*a), u(*g))) : std::nullopt;
      }
      Value er(Value g, Value a) const {
        return a && g ? cell(_s.extend_right(u(*g), u(*a))) : std::nullopt;
      }

      // generalised operators
      Value mr(Value a, Value g) const {
        return rl(meet(a, dom(g)), g);
      }
      Value mc(Value g, Value a) const {
        return rr(g, meet(cod(g), a));
      }
      Value je(Value a, Value g) const {
        return el(join(a, dom(g)), g);
      }
      Value jc(Value g, Value a) const {
        return er(g, join(cod(g), a));
      }
      Value left(BandOp o, Value a, Value g) const {
        return o == BandOp::meet ? mr(a, g) : je(a, g);
      }
      Value right(BandOp o, Value g, Value a) const {
        return o == BandOp::meet ? mc(g, a) : jc(g, a);
      }
      // a^g or a_g
      Value image(BandOp o, Value a, Value g) const {
        return cod(left(o, a, g));
      }

      Value product(BandOp o, Value f, Value g) const {
        Value const c = op(o, cod(f), dom(g));
        if (o == BandOp::meet) {
          return comp(rr(f, c), rl(c, g));
        }
        return comp(er(f, c), el(c, g));
      }

     private:
      static std::size_t u(Index x) {
        return static_cast<std::size_t>(x);
      }
      static Value cell(Index x) {
        return x == undefined ? std::nullopt : Value(x);
      }
    };

    Index must(Value v, char const* what, Index a, Index g) {
      if (!v) {
        throw Error(ErrorCode::malformed_system,
                    std::string(what) + " undefined at (" + std::to_string(a)
                        + "," + std::to_string(g) + ")");
      }
      return *v;
    }

    // Definedness and endpoint shape of one operator table. Left tables
    // are indexed (object, morphism), right tables (morphism, object).
    template <typename Defined, typename Shape, typename Cell>
    void table_shape(Eval const&      e,
                     AxiomReport&     report,
                     std::string const& prefix,
                     bool             left,
                     Cell const&      cell,
                     Defined const&   defined_iff,
                     Shape const&     shape) {
      auto& def = report.add(prefix + ".defined", left ? "a,g" : "g,a");
      auto& shp = report.add(prefix + ".shape", left ? "a,g" : "g,a");
      for (Index a = 0; a < e.n; ++a) {
        for (Index g = 0; g < e.m; ++g) {
          std::vector<Index> w = left ? std::vector<Index>{a, g}
                                      : std::vector<Index>{g, a};
          Value const        r = cell(a, g);
          require(def, r.has_value() == defined_iff(a, g), w);
          if (r) {
            require(shp, shape(a, g, *r), w);
          }
        }
      }
    }

    // Each operator table is defined exactly where its order condition
    // holds. Witness (table, row, column) with tables numbered restL,
    // restR, extL, extR.
    void operator_domains(Eval const& e, AxiomReport& report) {
      auto&      f   = report.add("operators.domain", "table,i,j");
      auto const& s  = e._s;
      for (Index a = 0; a < e.n; ++a) {
        for (Index g = 0; g < e.m; ++g) {
          Index const d = s.dom(g);
          Index const r = s.cod(g);
          require(f, e.rl(a, g).has_value() == e.le_left(a, d), {0, a, g});
          require(f, e.rr(g, a).has_value() == e.le_right(a, r), {1, g, a});
          require(f, e.el(a, g).has_value() == e.ge_left(a, d), {2, a, g});
          require(f, e.er(g, a).has_value() == e.ge_right(a, r), {3, g, a});
        }
      }
    }

  }  // namespace

  Index meet_restrict(RestrictionSystem const& sys, Index a, Index g) {
    return must(Eval(sys).mr(a, g), "restL", a, g);
  }

  Index meet_corestrict(RestrictionSystem const& sys, Index g, Index a) {
    return must(Eval(sys).mc(g, a), "restR", g, a);
  }

  Index join_extend(RestrictionSystem const& sys, Index a, Index g) {
    return must(Eval(sys).je(a, g), "extL", a, g);
  }

  Index join_coextend(RestrictionSystem const& sys, Index g, Index a) {
    return must(Eval(sys).jc(g, a), "extR", g, a);
  }

  ObjectActions actions(RestrictionSystem const& sys, Index a, Index g) {
    return ObjectActions{sys.cod(meet_restrict(sys, a, g)),
                         sys.dom(meet_corestrict(sys, g, a)),
                         sys.cod(join_extend(sys, a, g)),
                         sys.dom(join_coextend(sys, g, a))};
  }

  AxiomReport check_restriction_axioms(RestrictionSystem const& sys) {
    AxiomReport report("restriction");
    Eval const  e(sys);

    table_shape(
        e, report, "left", true,
        [&](Index a, Index g) { return e.rl(a, g); },
        [&](Index a, Index g) { return e.le_left(a, sys.dom(g)); },
        [&](Index a, Index g, Index r) {
          return sys.dom(r) == a && e.le_left(sys.cod(r), sys.cod(g));
        });
    table_shape(
        e, report, "right", false,
        [&](Index a, Index g) { return e.rr(g, a); },
        [&](Index a, Index g) { return e.le_right(a, sys.cod(g)); },
        [&](Index a, Index g, Index r) {
          return sys.cod(r) == a && e.le_right(sys.dom(r), sys.dom(g));
        });

    auto& l_id    = report.add("left.identities", "g");
    auto& l_pre   = report.add("left.preorders", "a,b");
    auto& l_trans = report.add("left.transitivity", "a,b,g");
    auto& l_comp  = report.add("left.composition", "a,f,g");
    auto& r_id    = report.add("right.identities", "g");
    auto& r_pre   = report.add("right.preorders", "a,b");
    auto& r_trans = report.add("right.transitivity", "g,b,a");
    auto& r_comp  = report.add("right.composition", "f,g,a");
    auto& eq1     = report.add("meet.objects_left", "a,b,g");
    auto& eq1d    = report.add("meet.objects_right", "g,a,b");
    auto& eq2     = report.add("meet.domain", "a,g");
    auto& eq2d    = report.add("meet.codomain", "g,a");
    auto& ident   = report.add("meet.identity", "a,b");
    auto& compat  = report.add("meet.compatibility", "a,f,b");

    for (Index g = 0; g < e.m; ++g) {
      require(l_id, same(e.rl(sys.dom(g), g), g), {g});
      require(r_id, same(e.rr(g, sys.cod(g)), g), {g});
    }
    for (Index a = 0; a < e.n; ++a) {
      for (Index b = 0; b < e.n; ++b) {
        if (e.le_left(a, b)) {
          require(l_pre, same(e.rl(a, e.id(b)), e.id(a)), {a, b});
        }
        if (e.le_right(a, b)) {
          require(r_pre, same(e.rr(e.id(b), a), e.id(a)), {a, b});
        }
        require(ident,
                same(e.mr(a, e.id(b)), e.id(e.meet(a, b)))
                    && same(e.mc(e.id(b), a), e.id(e.meet(b, a))),
                {a, b});
        for (Index g = 0; g < e.m; ++g) {
          if (e.le_left(a, b) && e.le_left(b, sys.dom(g))) {
            Value const x = e.rl(a, g);
            require(l_trans,
                    same(x, e.rl(e.meet(a, b), g))
                        && same(x, e.rl(a, e.rl(b, g))),
                    {a, b, g});
          }
          if (e.le_right(a, b) && e.le_right(b, sys.cod(g))) {
            Value const x = e.rr(g, a);
            require(r_trans,
                    same(x, e.rr(g, e.meet(b, a)))
                        && same(x, e.rr(e.rr(g, b), a)),
                    {g, b, a});
          }
          require(eq1, same(e.mr(e.meet(a, b), g), e.mr(a, e.mr(b, g))),
                  {a, b, g});
          require(eq1d, same(e.mc(g, e.meet(a, b)), e.mc(e.mc(g, a), b)),
                  {g, a, b});
          require(compat, same(e.mc(e.mr(a, g), b), e.mr(a, e.mc(g, b))),
                  {a, g, b});
        }
      }
      for (Index g = 0; g < e.m; ++g) {
        require(eq2, same(e.meet(a, sys.dom(g)), e.dom(e.mr(a, g))), {a, g});
        require(eq2d, same(e.meet(sys.cod(g), a), e.cod(e.mc(g, a))), {g, a});
      }
    }
    for (Index f = 0; f < e.m; ++f) {
      for (Index g = 0; g < e.m; ++g) {
        if (sys.cod(f) != sys.dom(g)) {
          continue;
        }
        Value const fg = e.comp(f, g);
        for (Index a = 0; a < e.n; ++a) {
          if (e.le_left(a, sys.dom(f))) {
            Value const af = e.rl(a, f);
            require(l_comp, same(e.rl(a, fg), e.comp(af, e.rl(e.cod(af), g))),
                    {a, f, g});
          }
          if (e.le_right(a, sys.cod(g))) {
            Value const ga = e.rr(g, a);
            require(r_comp, same(e.rr(fg, a), e.comp(e.rr(f, e.dom(ga)), ga)),
                    {f, g, a});
          }
        }
      }
    }
    return report;
  }

  AxiomReport check_extension_axioms(RestrictionSystem const& sys) {
    AxiomReport report("extension");
    Eval const  e(sys);

    table_shape(
        e, report, "left", true,
        [&](Index a, Index g) { return e.el(a, g); },
        [&](Index a, Index g) { return e.ge_left(a, sys.dom(g)); },
        [&](Index a, Index g, Index r) {
          return sys.dom(r) == a && e.ge_left(sys.cod(r), sys.cod(g));
        });
    table_shape(
        e, report, "right", false,
        [&](Index a, Index g) { return e.er(g, a); },
        [&](Index a, Index g) { return e.ge_right(a, sys.cod(g)); },
        [&](Index a, Index g, Index r) {
          return sys.cod(r) == a && e.ge_right(sys.dom(r), sys.dom(g));
        });

    auto& l_id    = report.add("left.identities", "g");
    auto& l_pre   = report.add("left.preorders", "a,b");
    auto& l_pre_g = report.add("left.preorders_joined", "a,b");
    auto& l_trans = report.add("left.transitivity", "a,b,g");
    auto& l_comp  = report.add("left.composition", "a,f,g");
    auto& r_id    = report.add("right.identities", "g");
    auto& r_pre   = report.add("right.preorders", "a,b");
    auto& r_pre_g = report.add("right.preorders_joined", "a,b");
    auto& r_trans = report.add("right.transitivity", "g,b,a");
    auto& r_comp  = report.add("right.composition", "f,g,a");
    auto& eq1     = report.add("join.objects_left", "a,b,g");
    auto& eq1d    = report.add("join.objects_right", "g,a,b");
    auto& eq2     = report.add("join.domain", "a,g");
    auto& eq2d    = report.add("join.codomain", "g,a");
    auto& ident   = report.add("join.identity", "a,b");
    auto& compat  = report.add("join.compatibility", "a,f,b");

    for (Index g = 0; g < e.m; ++g) {
      require(l_id, same(e.el(sys.dom(g), g), g), {g});
      require(r_id, same(e.er(g, sys.cod(g)), g), {g});
    }
    for (Index a = 0; a < e.n; ++a) {
      for (Index b = 0; b < e.n; ++b) {
        if (e.ge_left(a, b)) {
          require(l_pre, same(e.el(a, e.id(b)), e.id(a)), {a, b});
        }
        if (e.ge_right(a, b)) {
          require(r_pre, same(e.er(e.id(b), a), e.id(a)), {a, b});
          require(l_pre_g, same(e.je(a, e.id(b)), e.id(e.join(a, b))), {a, b});
        }
        if (e.ge_left(a, b)) {
          require(r_pre_g, same(e.jc(e.id(b), a), e.id(e.join(b, a))), {a, b});
        }
        require(ident,
                same(e.je(a, e.id(b)), e.id(e.join(a, b)))
                    && same(e.jc(e.id(b), a), e.id(e.join(b, a))),
                {a, b});
        for (Index g = 0; g < e.m; ++g) {
          if (e.ge_left(a, b) && e.ge_left(b, sys.dom(g))) {
            Value const x = e.el(a, g);
            require(l_trans,
                    same(x, e.el(e.join(a, b), g))
                        && same(x, e.el(a, e.el(b, g))),
                    {a, b, g});
          }
          if (e.ge_right(a, b) && e.ge_right(b, sys.cod(g))) {
            Value const x = e.er(g, a);
            require(r_trans,
                    same(x, e.er(g, e.join(b, a)))
                        && same(x, e.er(e.er(g, b), a)),
                    {g, b, a});
          }
          require(eq1, same(e.je(e.join(a, b), g), e.je(a, e.je(b, g))),
                  {a, b, g});
          require(eq1d, same(e.jc(g, e.join(a, b)), e.jc(e.jc(g, a), b)),
                  {g, a, b});
          require(compat, same(e.jc(e.je(a, g), b), e.je(a, e.jc(g, b))),
                  {a, g, b});
        }
      }
      for (Index g = 0; g < e.m; ++g) {
        require(eq2, same(e.join(a, sys.dom(g)), e.dom(e.je(a, g))), {a, g});
        require(eq2d, same(e.join(sys.cod(g), a), e.cod(e.jc(g, a))), {g, a});
      }
    }
    // a v (f o g) = (a v f) o (a_f v g) and its lateral dual, for all a.
    for (Index f = 0; f < e.m; ++f) {
      for (Index g = 0; g < e.m; ++g) {
        if (sys.cod(f) != sys.dom(g)) {
          continue;
        }
        Value const fg = e.comp(f, g);
        for (Index a = 0; a < e.n; ++a) {
          Value const af = e.je(a, f);
          require(l_comp, same(e.je(a, fg), e.comp(af, e.je(e.cod(af), g))),
                  {a, f, g});
          Value const ga = e.jc(g, a);
          require(r_comp, same(e.jc(fg, a), e.comp(e.jc(f, e.dom(ga)), ga)),
                  {f, g, a});
        }
      }
    }
    return report;
  }

  AxiomReport check_linking(RestrictionSystem const& sys) {
    AxiomReport report("linking");
    Eval const  e(sys);
    operator_domains(e, report);
    auto&       vi      = report.add("vi", "a,f");
    auto&       vi_eq   = report.add("vi.equivalent", "a,f");
    auto&       vi_ord  = report.add("vi.order_dual", "a,f");
    auto&       vi_lat  = report.add("vi.lateral", "f,a");
    auto&       vi_lo   = report.add("vi.lateral_order_dual", "f,a");
    auto&       vi_idem = report.add("vi.on_identities", "a,b");

    for (Index a = 0; a < e.n; ++a) {
      for (Index f = 0; f < e.m; ++f) {
        Value const r = sys.cod(f);
        Value const d = sys.dom(f);
        require(vi, same(e.jc(e.mr(a, f), r), f), {a, f});
        require(vi_eq,
                same(e.product(BandOp::join, e.mr(a, f), e.inv(f)), e.id(d)),
                {a, f});
        require(vi_ord, same(e.mc(e.je(a, f), r), f), {a, f});
        require(vi_lat, same(e.je(d, e.mc(f, a)), f), {f, a});
        require(vi_lo, same(e.mr(d, e.jc(f, a)), f), {f, a});
      }
      for (Index b = 0; b < e.n; ++b) {
        require(vi_idem,
                same(e.jc(e.mr(a, e.id(b)), b), e.id(b))
                    && same(e.join(e.meet(a, b), b), b),
                {a, b});
      }
    }
    return report;
  }

  AxiomReport verify_derived_identities(RestrictionSystem const& sys) {
    AxiomReport report("derived");
    Eval const  e(sys);
    operator_domains(e, report);

    for (BandOp o : {BandOp::meet, BandOp::join}) {
      std::string const p = std::string(to_string(o)) + ".";
      std::vector<Value> table(static_cast<std::size_t>(e.m * e.m));
      for (Index f = 0; f < e.m; ++f) {
        for (Index g = 0; g < e.m; ++g) {
          table[static_cast<std::size_t>(f * e.m + g)] = e.product(o, f, g);
        }
      }
      auto mul = [&](Value f, Value g) -> Value {
        if (!f || !g) {
          return std::nullopt;
        }
        return table[static_cast<std::size_t>(*f * e.m + *g)];
      };
      auto star = [&](Value f) { return e.inv(f); };

      auto& total    = report.add(p + "total", "f,g");
      auto& ext_comp = report.add(p + "extends_composition", "f,g");
      auto& ext_obj  = report.add(p + "extends_objects", "a,b");
      auto& left_obj = report.add(p + "left_object_action", "a,f");
      auto& rght_obj = report.add(p + "right_object_action", "f,a");
      auto& lem_i    = report.add(p + "mixed_associativity", "f,e,g");
      auto& lem_ii   = report.add(p + "action_of_product", "e,f,g");
      auto& lem_iii  = report.add(p + "object_then_product", "e,f,g");
      auto& assoc    = report.add(p + "associativity", "f,g,h");
      auto& idem     = report.add(p + "idempotents_are_identities", "f");
      auto& regular  = report.add(p + "regular", "f");
      auto& inv_act  = report.add(p + "inverse_of_action", "a,f");

      for (Index f = 0; f < e.m; ++f) {
        for (Index g = 0; g < e.m; ++g) {
          Value const fg = mul(f, g);
          require(total, fg.has_value(), {f, g});
          if (sys.cod(f) == sys.dom(g)) {
            require(ext_comp, same(fg, e.comp(f, g)), {f, g});
          }
          for (Index h = 0; h < e.m; ++h) {
            require(assoc, same(mul(fg, h), mul(f, mul(g, h))), {f, g, h});
          }
        }
        bool const is_id = sys.groupoid.is_identity(f);
        require(idem, same(mul(f, f), f) == is_id, {f});
        require(regular, same(mul(mul(f, star(f)), f), f), {f});
      }
      for (Index a = 0; a < e.n; ++a) {
        for (Index b = 0; b < e.n; ++b) {
          require(ext_obj, same(mul(e.id(a), e.id(b)), e.id(e.op(o, a, b))),
                  {a, b});
        }
        for (Index f = 0; f < e.m; ++f) {
          require(left_obj, same(mul(e.id(a), f), e.left(o, a, f)), {a, f});
          require(rght_obj, same(mul(f, e.id(a)), e.right(o, f, a)), {f, a});
          Value const af = e.left(o, a, f);
          require(inv_act,
                  same(e.inv(af), e.left(o, e.cod(af), e.inv(f))),
                  {a, f});
          for (Index g = 0; g < e.m; ++g) {
            Value const fg = mul(f, g);
            require(lem_i, same(mul(mul(f, e.id(a)), g), mul(f, mul(e.id(a), g))),
                    {f, a, g});
            require(lem_ii,
                    same(e.image(o, a, fg), e.image(o, e.image(o, a, f), g)),
                    {a, f, g});
            require(lem_iii, same(e.left(o, a, fg), mul(e.left(o, a, f), g)),
                    {a, f, g});
          }
        }
      }

      detail::plus_minus_identities(report, p + "plus_minus.",
                                    sys.morphism_count(), mul, star);

      // Observations: these hold in restriction semigroups but need not
      // hold here.
      auto plus  = [&](Value s) { return mul(s, star(s)); };
      auto minus = [&](Value s) { return mul(star(s), s); };
      auto& rs_l = report.observe(p + "restriction_semigroup_left", "s,t");
      auto& rs_r = report.observe(p + "restriction_semigroup_right", "s,t");
      for (Index s = 0; s < e.m; ++s) {
        for (Index t = 0; t < e.m; ++t) {
          require(rs_l, same(mul(plus(mul(s, t)), s), mul(s, plus(t))), {s, t});
          require(rs_r, same(mul(t, minus(mul(s, t))), mul(minus(s), t)),
                  {s, t});
        }
      }
      auto& inverse = report.observe(p + "inverse_semigroup", "s");
      for (Index s = 0; s < e.m; ++s) {
        int count = 0;
        for (Index t = 0; t < e.m; ++t) {
          count += same(mul(mul(s, t), s), s) && same(mul(mul(t, s), t), t);
        }
        require(inverse, count == 1, {s});
      }
    }

    auto& sym   = report.observe("caution.action_symmetry", "a,f");
    auto& sides = report.observe("caution.restriction_sides", "a,f");
    for (Index a = 0; a < e.n; ++a) {
      for (Index f = 0; f < e.m; ++f) {
        Value const af = e.mr(a, f);
        require(sym, same(e.cod(af), e.dom(e.mc(e.inv(f), a))), {a, f});
        require(sides, same(af, e.mc(f, e.cod(af))), {a, f});
      }
    }
    return report;
  }

  std::vector<AxiomReport> check_system(RestrictionSystem const& sys) {
    std::vector<AxiomReport> out;
    out.push_back(check_groupoid(sys.groupoid));
    out.push_back(check_skew_lattice(sys.objects));
    out.push_back(check_restriction_axioms(sys));
    out.push_back(check_extension_axioms(sys));
    out.push_back(check_linking(sys));
    out.push_back(verify_derived_identities(sys));
    return out;
  }

  SkewInductiveGroupoid SkewInductiveGroupoid::verify(RestrictionSystem sys) {
    validate_shape(sys);
    for (auto const& r : check_system(sys)) {
      if (auto const* f = r.first_failure()) {
        std::string w;
        for (Index x : f->witness) {
          w += (w.empty() ? "" : ",") + std::to_string(x);
        }
        throw Error(ErrorCode::axiom_violation,
                    r.title() + "." + f->name + " fails at (" + f->roles
                        + ") = (" + w + ")");
      }
    }
    SkewInductiveGroupoid out;
    Eval const            e(sys);
    auto const            m = sys.morphism_count();
    out._meet               = OperationTable(m);
    out._join               = OperationTable(m);
    for (Index f = 0; f < e.m; ++f) {
      for (Index g = 0; g < e.m; ++g) {
        auto const i = static_cast<std::size_t>(f);
        auto const j = static_cast<std::size_t>(g);
        out._meet.at(i, j) = *e.product(BandOp::meet, f, g);
        out._join.at(i, j) = *e.product(BandOp::join, f, g);
      }
    }
    out._sys = std::move(sys);
    return out;
  }

  Index pseudoproduct(SkewInductiveGroupoid const& g,
                      Index                        f,
                      Index                        h,
                      BandOp                       op) {
    return g.table(op)(f, h);
  }

  GroupoidAlgebra build_algebra(SkewInductiveGroupoid const& g) {
    auto const& sys = g.system();
    return GroupoidAlgebra{
        BiBandAlgebra::from_tables(g.table(BandOp::join), g.table(BandOp::meet),
                                   sys.groupoid.inv_table()),
        Isomorphism::identity(sys.morphism_count())};
  }

  GroupoidAlgebra build_algebra(RestrictionSystem const& sys) {
    return build_algebra(SkewInductiveGroupoid::verify(sys));
  }

  Structure to_structure(RestrictionSystem const& sys) {
    auto const m = sys.morphism_count();
    auto const n = sys.object_count();
    for (std::size_t a = 0; a < n; ++a) {
      if (sys.identity(static_cast<Index>(a)) == undefined) {
        throw Error(ErrorCode::malformed_system,
                    "object " + std::to_string(a) + " has no identity");
      }
    }
    Structure s{m, {}, {sys.groupoid.inv_table()}};
    s.binary.push_back(sys.groupoid.comp_table());
    auto id = [&](std::size_t a) {
      return static_cast<std::size_t>(sys.identity(static_cast<Index>(a)));
    };
    PartialTable rl(m, m), rr(m, m), el(m, m), er(m, m), meet(m, m), join(m, m);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t g = 0; g < m; ++g) {
        rl.at(id(a), g) = sys.restrict_left(a, g);
        el.at(id(a), g) = sys.extend_left(a, g);
        rr.at(g, id(a)) = sys.restrict_right(g, a);
        er.at(g, id(a)) = sys.extend_right(g, a);
      }
      for (std::size_t b = 0; b < n; ++b) {
        auto const ai = static_cast<Index>(a);
        auto const bi = static_cast<Index>(b);
        meet.at(id(a), id(b)) = sys.identity(sys.objects.meet(ai, bi));
        join.at(id(a), id(b)) = sys.identity(sys.objects.join(ai, bi));
      }
    }
    for (auto* t : {&rl, &rr, &el, &er, &meet, &join}) {
      s.binary.push_back(std::move(*t));
    }
    return s;
  }

}  // namespace skewind
