// End-to-end acceptance run: one line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "skewind/algebra.hpp"
#include "skewind/enumerate.hpp"
#include "skewind/error.hpp"
#include "skewind/groupoid.hpp"
#include "skewind/models.hpp"
#include "skewind/reconstruction.hpp"
#include "skewind/relations.hpp"
#include "skewind/restriction_system.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace skewind;

namespace {

  using Clock = std::chrono::steady_clock;

  constexpr double soundness_budget_s = 60.0;
  constexpr double oracle_budget_s    = 10.0;
  constexpr double mutation_budget_s  = 120.0;
  constexpr int    mutations          = 100;
  constexpr int    mutations_required = 95;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void fail(std::string const& why) {
      if (pass) {
        detail = why;
      }
      pass = false;
    }
  };

  int failures = 0;

  void print(int k, char const* what, Outcome const& o) {
    std::printf("C%d %s  %s  %s\n", k, o.pass ? "PASS" : "FAIL", what,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }

  bool detected(AxiomReport const& r) {
    auto const* f = r.first_failure();
    return f != nullptr && !f->witness.empty();
  }

  std::string first_failure(std::vector<AxiomReport> const& rs) {
    for (auto const& r : rs) {
      if (!r.pass()) {
        return r.summary();
      }
    }
    return {};
  }

  std::vector<ModelInstance> suite;

  Outcome soundness(double elapsed_generation) {
    Outcome    o;
    auto const t0 = Clock::now();
    for (auto const& m : suite) {
      auto const& sys = m.groupoid.system;
      auto const  err = first_failure({check_restriction_axioms(sys),
                                       check_extension_axioms(sys),
                                       check_linking(sys),
                                       verify_derived_identities(sys)});
      if (!err.empty()) {
        o.fail(m.name + ": " + err);
        continue;
      }
      auto const S    = build_algebra(sys).algebra;
      auto const aerr = first_failure({check_axioms(S), check_skehr(S)});
      if (!aerr.empty()) {
        o.fail(m.name + ": " + aerr);
      }
    }
    double const t = elapsed_generation + seconds_since(t0);
    if (t > soundness_budget_s) {
      o.fail("took " + std::to_string(t) + " s");
    }
    if (o.pass) {
      o.detail = std::to_string(suite.size()) + " instances, "
                 + std::to_string(t) + " s";
    }
    return o;
  }

  Outcome roundtrips() {
    Outcome o;
    for (auto const& m : suite) {
      try {
        auto const iso = roundtrip_groupoid(m.groupoid.system);
        auto const R   = reconstruct(build_algebra(m.groupoid.system).algebra);
        if (!verify_system_isomorphism(m.groupoid.system, R.system, iso)) {
          o.fail(m.name + ": system isomorphism not certified");
        }
        auto const a = roundtrip_algebra(m.algebra.algebra);
        if (!verify_isomorphism(to_structure(m.algebra.algebra),
                                to_structure(m.algebra.algebra), a)) {
          o.fail(m.name + ": algebra isomorphism not certified");
        }
      } catch (Error const& e) {
        o.fail(m.name + ": " + e.what());
      }
    }
    if (o.pass) {
      o.detail = std::to_string(2 * suite.size()) + " certified round trips";
    }
    return o;
  }

  Outcome constructions_agree() {
    Outcome o;
    for (auto const& m : suite) {
      auto const built = build_algebra(m.groupoid.system).algebra;
      auto const iso   = find_isomorphism(built, m.algebra.algebra);
      if (!iso || !verify_isomorphism(to_structure(built),
                                      to_structure(m.algebra.algebra), *iso)) {
        o.fail(m.name + ": no isomorphism");
      }
    }
    if (o.pass) {
      o.detail = std::to_string(suite.size()) + " isomorphisms certified";
    }
    return o;
  }

  // Independent evaluation of the identity (s ^ t)+ ^ s = s ^ t+ on raw
  // tables, s+ = s ^ s*.
  bool restriction_identity(BiBandAlgebra const& S, Index s, Index t) {
    auto const& m    = S.meet.cells();
    auto const  n    = static_cast<Index>(S.order());
    auto        mul  = [&](Index x, Index y) { return m[static_cast<std::size_t>(x * n + y)]; };
    auto        plus = [&](Index x) { return mul(x, S.star[static_cast<std::size_t>(x)]); };
    return mul(plus(mul(s, t)), s) == mul(s, plus(t));
  }

  bool unique_inverses(OperationTable const& t) {
    auto const n = static_cast<Index>(t.order());
    for (Index s = 0; s < n; ++s) {
      int count = 0;
      for (Index x = 0; x < n; ++x) {
        count += t(t(s, x), s) == s && t(t(x, s), x) == x;
      }
      if (count != 1) {
        return false;
      }
    }
    return true;
  }

  bool semilattice(SkewLatticeTable const& b) {
    auto const n = static_cast<Index>(b.order());
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (b.meet(x, y) != b.meet(y, x) || b.join(x, y) != b.join(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  Outcome negative_witnesses() {
    Outcome     o;
    std::string a_text, b_text;
    std::size_t lattices = 0;
    for (auto const& m : suite) {
      auto const& S = m.algebra.algebra;
      if (a_text.empty()) {
        if (auto w = anti_automorphism_witness(S)) {
          auto const& t  = S.op(w->op);
          Index const l  = S.star[static_cast<std::size_t>(t(w->s, w->t))];
          Index const r  = t(S.star[static_cast<std::size_t>(w->t)],
                             S.star[static_cast<std::size_t>(w->s)]);
          if (l == r) {
            o.fail(m.name + ": anti-automorphism witness does not reproduce");
          }
          a_text = m.name + " (s,t)=(" + std::to_string(w->s) + ","
                   + std::to_string(w->t) + ") " + to_string(w->op);
        }
      }
      bool const lattice = semilattice(m.action.lattice);
      if (!lattice && b_text.empty()) {
        auto const  rep = verify_derived_identities(m.groupoid.system);
        auto const* f   = rep.find_observation("meet.restriction_semigroup_left");
        if (f != nullptr && !f->pass) {
          auto const& sys = m.groupoid.system;
          auto const  S2  = build_algebra(sys).algebra;
          if (restriction_identity(S2, f->witness[0], f->witness[1])) {
            o.fail(m.name + ": restriction identity witness does not reproduce");
          }
          b_text = m.name + " (s,t)=(" + std::to_string(f->witness[0]) + ","
                   + std::to_string(f->witness[1]) + ")";
        }
      }
      if (lattice) {
        ++lattices;
        auto const n = static_cast<Index>(S.order());
        for (Index s = 0; s < n; ++s) {
          for (Index t = 0; t < n; ++t) {
            if (!restriction_identity(S, s, t)) {
              o.fail(m.name + ": identity fails over a lattice");
            }
          }
        }
        if (!unique_inverses(S.meet) || !unique_inverses(S.join)) {
          o.fail(m.name + ": not inverse over a lattice");
        }
      }
    }
    if (a_text.empty()) {
      o.fail("(a) no anti-automorphism witness");
    }
    if (b_text.empty()) {
      o.fail("(b) no restriction identity witness");
    }
    if (o.pass) {
      o.detail = "(a) " + a_text + "; (b) " + b_text + "; (c) "
                 + std::to_string(lattices) + " lattice instances inverse";
    }
    return o;
  }

  Outcome enumeration() {
    Outcome    o;
    auto const t0 = Clock::now();
    if (enumerate_bands(2).size() != 3) {
      o.fail("enumerate_bands(2) != 3");
    }
    std::string counts;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const bands  = enumerate_bands(n).size();
      auto const skews  = enumerate_skew_lattices(n).size();
      auto const obands = oracle::band_classes(n).size();
      auto const oskews = oracle::skew_lattice_classes(n).size();
      if (bands != obands || skews != oskews) {
        o.fail("order " + std::to_string(n) + " disagrees with the naive count");
      }
      counts += " " + std::to_string(bands) + "/" + std::to_string(skews);
    }
    double const t = seconds_since(t0);
    if (t > oracle_budget_s) {
      o.fail("took " + std::to_string(t) + " s");
    }
    if (o.pass) {
      o.detail = "bands/skew lattices of order 1..3:" + counts + ", "
                 + std::to_string(t) + " s";
    }
    return o;
  }

  Outcome kernels() {
    Outcome o;
    for (auto const& m : suite) {
      auto const k = congruence_kernels(m.action);
      if (!k.report.pass()) {
        o.fail(m.name + ": " + k.report.summary());
      }
    }
    if (o.pass) {
      o.detail = std::to_string(suite.size()) + " actions";
    }
    return o;
  }

  Outcome restriction_laws() {
    Outcome                        o;
    std::vector<std::string> const restriction_flags = {
        "meet.objects_left", "meet.domain"};
    std::vector<std::string> const derived_flags = {
        "meet.mixed_associativity",  "meet.action_of_product",
        "meet.object_then_product",  "meet.associativity",
        "join.mixed_associativity",  "join.action_of_product",
        "join.object_then_product",  "join.associativity"};
    auto require = [&](ModelInstance const& m, AxiomReport const& r,
                       std::vector<std::string> const& names) {
      for (auto const& name : names) {
        auto const* f = r.find(name);
        if (f == nullptr || !f->pass) {
          o.fail(m.name + ": " + name);
        }
      }
    };
    for (auto const& m : suite) {
      require(m, check_restriction_axioms(m.groupoid.system), restriction_flags);
      require(m, check_extension_axioms(m.groupoid.system),
              {"join.objects_left", "join.domain"});
      require(m, verify_derived_identities(m.groupoid.system), derived_flags);
    }
    if (o.pass) {
      o.detail = std::to_string(suite.size()) + " systems";
    }
    return o;
  }

  // Replaces one cell of t (chosen among cells()) by a different value in
  // [lo, hi].
  template <typename Table>
  void flip(Table& t, std::size_t cols, Index lo, Index hi, std::mt19937& rng) {
    std::size_t const c = std::uniform_int_distribution<std::size_t>(
        0, t.cells().size() - 1)(rng);
    Index&      cell = t.at(c / cols, c % cols);
    Index const old  = cell;
    do {
      cell = std::uniform_int_distribution<Index>(lo, hi)(rng);
    } while (cell == old);
  }

  void flip_vector(std::vector<Index>& v, Index hi, std::mt19937& rng) {
    auto&       cell = v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    Index const old  = cell;
    do {
      cell = std::uniform_int_distribution<Index>(0, hi)(rng);
    } while (cell == old);
  }

  Outcome mutation() {
    Outcome     o;
    auto const  t0   = Clock::now();
    auto const& m    = fixtures::rich_instance();
    auto const& sys0 = m.groupoid.system;
    auto const  S0   = build_algebra(sys0).algebra;
    auto const  nb   = static_cast<Index>(m.action.lattice.order());
    auto const  nm   = static_cast<Index>(sys0.morphism_count());
    std::mt19937 rng(20261016);

    auto mutate_operator = [&](RestrictionSystem& s, int which) {
      switch (which) {
        case 0: flip(s.restrict_left, s.restrict_left.cols(), undefined, nm - 1, rng); break;
        case 1: flip(s.restrict_right, s.restrict_right.cols(), undefined, nm - 1, rng); break;
        case 2: flip(s.extend_left, s.extend_left.cols(), undefined, nm - 1, rng); break;
        default: flip(s.extend_right, s.extend_right.cols(), undefined, nm - 1, rng); break;
      }
    };
    auto system_checker = [&](std::function<AxiomReport(RestrictionSystem const&)> check,
                              std::vector<int> tables) {
      return [=, &rng, &sys0, &mutate_operator] {
        RestrictionSystem s = sys0;
        int const which = tables[std::uniform_int_distribution<std::size_t>(
            0, tables.size() - 1)(rng)];
        mutate_operator(s, which);
        return detected(check(s));
      };
    };

    struct Case {
      char const*           name;
      std::function<bool()> run;
    };
    std::vector<Case> cases = {
        {"check_skew_lattice",
         [&] {
           auto b = m.action.lattice;
           auto& t = rng() % 2 ? b.meet : b.join;
           flip(t, t.order(), 0, nb - 1, rng);
           return detected(check_skew_lattice(b));
         }},
        {"check_groupoid",
         [&] {
           auto g = sys0.groupoid;
           if (rng() % 4 == 0) {
             flip_vector(g.inv_table_mut(), nm - 1, rng);
           } else {
             flip(g.comp_table_mut(), g.comp_table().cols(), undefined, nm - 1, rng);
           }
           return detected(check_groupoid(g));
         }},
        {"check_restriction_axioms", system_checker(check_restriction_axioms, {0, 1})},
        {"check_extension_axioms", system_checker(check_extension_axioms, {2, 3})},
        {"check_linking", system_checker(check_linking, {0, 1, 2, 3})},
        {"verify_derived_identities", system_checker(verify_derived_identities, {0, 1, 2, 3})},
        {"check_axioms",
         [&] {
           auto S = S0;
           auto const k = rng() % 5;
           auto const n = static_cast<Index>(S.order());
           if (k == 0) {
             flip_vector(S.star, n - 1, rng);
           } else {
             auto& t = k % 2 ? S.meet : S.join;
             flip(t, t.order(), 0, n - 1, rng);
           }
           return detected(check_axioms(S));
         }},
        {"check_skehr",
         [&] {
           auto S = S0;
           auto const k = rng() % 5;
           auto const n = static_cast<Index>(S.order());
           if (k == 0) {
             flip_vector(S.star, n - 1, rng);
           } else {
             auto& t = k % 2 ? S.meet : S.join;
             flip(t, t.order(), 0, n - 1, rng);
           }
           return detected(check_skehr(S));
         }},
        {"check_action",
         [&] {
           auto A = m.action;
           auto& row = A.act[std::uniform_int_distribution<std::size_t>(0, A.act.size() - 1)(rng)];
           auto& cell = row[std::uniform_int_distribution<std::size_t>(0, row.size() - 1)(rng)];
           Index const old = cell;
           do {
             cell = std::uniform_int_distribution<Index>(0, nb - 1)(rng);
           } while (cell == old);
           return detected(check_action(A));
         }},
    };

    std::string counts;
    for (auto& c : cases) {
      int hits = 0;
      for (int k = 0; k < mutations; ++k) {
        hits += c.run();
      }
      counts += std::string(" ") + c.name + "=" + std::to_string(hits);
      if (hits < mutations_required) {
        o.fail(std::string(c.name) + " detected " + std::to_string(hits) + "/"
               + std::to_string(mutations));
      }
    }
    double const t = seconds_since(t0);
    if (t > mutation_budget_s) {
      o.fail("took " + std::to_string(t) + " s");
    }
    o.detail = (o.pass ? std::string() : o.detail + "; ") + "on " + m.name + ":"
               + counts + " (of " + std::to_string(mutations) + "), "
               + std::to_string(t) + " s";
    return o;
  }

}  // namespace

int main() {
  auto const t0 = Clock::now();
  suite         = generate_model_suite({6, 4});
  double const generation = seconds_since(t0);

  print(1, "construction soundness", soundness(generation));
  print(2, "round trips", roundtrips());
  print(3, "groupoid and algebra constructions agree", constructions_agree());
  print(4, "negative witnesses", negative_witnesses());
  print(5, "enumeration oracle agreement", enumeration());
  print(6, "kernel chain", kernels());
  print(7, "restriction laws and pseudoproduct associativity", restriction_laws());
  print(8, "mutation sensitivity", mutation());

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
