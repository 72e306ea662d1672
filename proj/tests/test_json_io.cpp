#include <doctest.h>

#include "skewind/error.hpp"
#include "skewind/json_io.hpp"
#include "skewind/reconstruction.hpp"
#include "skewind/relations.hpp"
#include "support/fixtures.hpp"

using namespace skewind;
using skewind::json_io::json;
namespace jio = skewind::json_io;

namespace {

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::malformed_input;
  }

}  // namespace

TEST_CASE("skew lattices round-trip") {
  auto const b = fixtures::rectangular(3);
  auto const j = jio::to_json(b);
  CHECK(j["order"] == 3);
  CHECK(j["ops"]["meet"][0] == json::array({0, 0, 0}));
  CHECK(jio::read_skew_lattice(j) == b);
  CHECK(jio::read_skew_lattice(jio::parse(j.dump())) == b);
}

TEST_CASE("groups round-trip") {
  auto const g = fixtures::cyclic(4);
  auto const r = jio::read_group(jio::to_json(g));
  CHECK(r.table() == g.table());
  CHECK(r.identity() == g.identity());
}

TEST_CASE("systems, algebras and actions round-trip") {
  auto const& m = fixtures::rich_instance();
  auto const  s = jio::read_system(jio::to_json(m.groupoid.system));
  CHECK(s.objects == m.groupoid.system.objects);
  CHECK(s.restrict_left == m.groupoid.system.restrict_left);
  CHECK(s.extend_right == m.groupoid.system.extend_right);
  CHECK(s.groupoid.comp_table() == m.groupoid.system.groupoid.comp_table());
  CHECK(s.groupoid.inv_table() == m.groupoid.system.groupoid.inv_table());

  CHECK(jio::read_algebra(jio::to_json(m.algebra.algebra)) == m.algebra.algebra);

  auto const a = jio::read_action(jio::to_json(m.action));
  CHECK(a.act == m.action.act);
  CHECK(a.lattice == m.action.lattice);
}

TEST_CASE("readers find blocks inside a model document") {
  auto const& m = fixtures::rich_instance();
  auto const  j = jio::to_json(m);
  CHECK(j["name"] == m.name);
  CHECK(jio::read_algebra(j) == m.algebra.algebra);
  CHECK(jio::read_system(j).objects == m.groupoid.system.objects);
  CHECK(jio::read_action(j).act == m.action.act);
}

TEST_CASE("reports carry witnesses") {
  auto b       = fixtures::rectangular(2);
  b.join.at(0, 1) = 0;
  auto const r = check_skew_lattice(b);
  REQUIRE_FALSE(r.pass());
  auto const j = jio::to_json(r);
  CHECK(j["pass"] == false);
  bool seen = false;
  for (auto const& f : j["flags"]) {
    if (f["pass"] == false) {
      CHECK(f["witness"].is_array());
      CHECK_FALSE(f["roles"].get<std::string>().empty());
      seen = true;
    } else {
      CHECK(f["witness"].is_null());
    }
  }
  CHECK(seen);
}

TEST_CASE("isomorphisms serialise as maps") {
  auto const iso = roundtrip_algebra(fixtures::rich_instance().algebra.algebra);
  auto const j   = jio::to_json(iso);
  CHECK(j.is_array());
  CHECK(j.size() == iso.map.size());
}

TEST_CASE("malformed input") {
  CHECK(code_of([] { jio::parse("{ not json"); }) == ErrorCode::malformed_input);
  CHECK(code_of([] { jio::read_skew_lattice(json::object()); })
        == ErrorCode::malformed_input);
  CHECK(code_of([] {
          jio::read_skew_lattice(jio::parse(
              R"({"order": 2, "ops": {"meet": [[0, 0], [0]], "join": [[0, 1], [1, 1]]}})"));
        })
        == ErrorCode::malformed_input);
  CHECK(code_of([] {
          jio::read_skew_lattice(jio::parse(
              R"({"order": 2, "ops": {"meet": [[0, 5], [0, 1]], "join": [[0, 1], [1, 1]]}})"));
        })
        == ErrorCode::malformed_input);
  CHECK(code_of([] {
          jio::read_algebra(jio::parse(
              R"({"order": 1, "join": [[0]], "meet": [[0]], "star": [1]})"));
        })
        == ErrorCode::malformed_input);
  CHECK(code_of([] {
          jio::read_group(jio::parse(R"({"order": 2, "ops": {"mul": [[0, 0], [0, 0]]}})"));
        })
        == ErrorCode::malformed_input);
}

TEST_CASE("a system with tables of the wrong shape is refused") {
  auto j = jio::to_json(fixtures::rich_instance().groupoid.system);
  j["restL"].erase(0);
  CHECK(code_of([&] { jio::read_system(j); }) == ErrorCode::malformed_input);
}
