#include <doctest.h>

#include "skewind/error.hpp"
#include "skewind/models.hpp"
#include "skewind/reconstruction.hpp"
#include "support/fixtures.hpp"

using namespace skewind;

TEST_CASE("a skew lattice reconstructs to the discrete groupoid over it") {
  auto const b = fixtures::rectangular(3);
  auto const R = reconstruct(BiBandAlgebra::from_skew_lattice(b));
  CHECK(R.system.object_count() == 3);
  CHECK(R.system.morphism_count() == 3);
  CHECK(R.system.objects == b);
  for (Index s = 0; s < 3; ++s) {
    CHECK(R.system.groupoid.is_identity(s));
  }
  auto const iso = roundtrip_algebra(BiBandAlgebra::from_skew_lattice(b));
  CHECK(iso.is_identity());
}

TEST_CASE("a group reconstructs to the one-object groupoid") {
  auto const G = fixtures::cyclic(4);
  auto const S = BiBandAlgebra::from_group(G);
  auto const R = reconstruct(S);
  CHECK(R.system.object_count() == 1);
  CHECK(R.object_element == std::vector<Index>{G.identity()});
  for (Index u = 0; u < 4; ++u) {
    for (Index v = 0; v < 4; ++v) {
      CHECK(R.system.groupoid.comp(u, v) == G(u, v));
    }
  }
  CHECK(roundtrip_algebra(S).is_identity());
}

TEST_CASE("semidirect algebras reconstruct to the semidirect groupoid") {
  for (auto const* m : {&fixtures::rich_instance(), &fixtures::suite()[3]}) {
    auto const R   = reconstruct(m->algebra.algebra);
    auto const iso = find_isomorphism(to_structure(R.system),
                                      to_structure(m->groupoid.system));
    CHECK(iso.has_value());
  }
}

TEST_CASE("round trips over the whole suite") {
  for (auto const& m : fixtures::suite()) {
    CAPTURE(m.name);
    auto const iso = roundtrip_groupoid(m.groupoid.system);
    auto const R   = reconstruct(build_algebra(m.groupoid.system).algebra);
    CHECK(verify_system_isomorphism(m.groupoid.system, R.system, iso));
    CHECK(roundtrip_algebra(m.algebra.algebra).is_identity());
  }
}

TEST_CASE("a discrete system round-trips with the identity shape") {
  auto const c1  = GroupTable::from_table(tables::cyclic_group(1));
  auto const sys = semidirect_groupoid(GroupAction::trivial(c1, fixtures::lattice(3))).system;
  auto const iso = roundtrip_groupoid(sys);
  CHECK(iso.objects.is_identity());
  CHECK(iso.morphisms.is_identity());
}

TEST_CASE("a corrupted system is refused") {
  auto s = fixtures::rich_instance().groupoid.system;
  s.extend_left.at(0, 0) = undefined;
  try {
    roundtrip_groupoid(s);
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::axiom_violation);
  }
}

TEST_CASE("an algebra failing the axioms is refused") {
  auto S = fixtures::rich_instance().algebra.algebra;
  S.star[1] = S.star[0];
  CHECK_THROWS_AS(reconstruct(S), Error);
}

TEST_CASE("a wrong isomorphism is rejected") {
  auto const& sys = fixtures::rich_instance().groupoid.system;
  auto        iso = roundtrip_groupoid(sys);
  std::swap(iso.morphisms.map[0], iso.morphisms.map[1]);
  auto const R = reconstruct(build_algebra(sys).algebra);
  CHECK_FALSE(verify_system_isomorphism(sys, R.system, iso));
}
