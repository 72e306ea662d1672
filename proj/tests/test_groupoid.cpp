#include <doctest.h>

#include "skewind/error.hpp"
#include "skewind/groupoid.hpp"
#include "support/fixtures.hpp"

using namespace skewind;

namespace {

  // Objects 0, 1; morphisms 0 = i_0, 1 = i_1, 2 : 0 -> 1, 3 : 1 -> 0.
  FiniteGroupoid pair_groupoid() {
    PartialTable comp(4, 4);
    auto set = [&](Index f, Index g, Index h) {
      comp.at(static_cast<std::size_t>(f), static_cast<std::size_t>(g)) = h;
    };
    set(0, 0, 0);
    set(1, 1, 1);
    set(0, 2, 2);
    set(2, 1, 2);
    set(1, 3, 3);
    set(3, 0, 3);
    set(2, 3, 0);
    set(3, 2, 1);
    return FiniteGroupoid(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}, comp, {0, 1, 3, 2});
  }

}  // namespace

TEST_CASE("discrete and group groupoids pass") {
  CHECK(check_groupoid(FiniteGroupoid::discrete(3)).pass());
  CHECK(check_groupoid(FiniteGroupoid::from_group(fixtures::cyclic(4))).pass());
  CHECK(check_groupoid(pair_groupoid()).pass());
}

TEST_CASE("identities are derived when not given") {
  auto const g = pair_groupoid();
  CHECK(g.identity_of(0) == 0);
  CHECK(g.identity_of(1) == 1);
  CHECK(g.is_identity(0));
  CHECK_FALSE(g.is_identity(2));
}

TEST_CASE("a missing inverse is reported") {
  auto g = pair_groupoid();
  g.inv_table_mut()[2] = 2;
  auto const r = check_groupoid(g);
  CHECK_FALSE(r.pass());
  auto const* f = r.find("inverses");
  REQUIRE(f != nullptr);
  CHECK_FALSE(f->pass);
  CHECK(f->witness == std::vector<Index>{2});
}

TEST_CASE("a composition defined off its domain is reported") {
  auto g                = pair_groupoid();
  g.comp_table_mut().at(2, 2) = 2;
  CHECK_FALSE(check_groupoid(g).find("composition.domain")->pass);
}

TEST_CASE("compose and invert") {
  auto const g = pair_groupoid();
  for (Index f = 0; f < 4; ++f) {
    CHECK(compose(g, g.identity_of(g.dom(f)), f) == f);
    CHECK(compose(g, f, invert(g, f)) == g.identity_of(g.dom(f)));
    CHECK(invert(g, invert(g, f)) == f);
  }
  CHECK(invert(g, g.identity_of(1)) == g.identity_of(1));
  try {
    compose(g, 2, 2);
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::undefined_composition);
  }
  auto const G = fixtures::cyclic(5);
  auto const h = FiniteGroupoid::from_group(G);
  for (Index u = 0; u < 5; ++u) {
    CHECK(invert(h, u) == G.inverse(u));
  }
}

TEST_CASE("construction validates indices") {
  CHECK_THROWS_AS(FiniteGroupoid(1, {{0, 1}}, PartialTable(1, 1), {0}), Error);
  CHECK_THROWS_AS(FiniteGroupoid(1, {{0, 0}}, PartialTable(2, 2), {0}), Error);
  CHECK_THROWS_AS(FiniteGroupoid(1, {{0, 0}}, PartialTable(1, 1), {3}), Error);
}
