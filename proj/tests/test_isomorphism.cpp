#include <doctest.h>

#include <random>

#include "skewind/enumerate.hpp"
#include "skewind/error.hpp"
#include "skewind/isomorphism.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace skewind;

TEST_CASE("identical structures give the identity") {
  auto const t   = tables::chain_meet(4);
  auto const iso = find_isomorphism(t, t);
  REQUIRE(iso.has_value());
  CHECK(iso->is_identity());
}

TEST_CASE("relabelled semilattice gives the swap") {
  OperationTable const a({{0, 0}, {0, 1}});
  OperationTable const b({{0, 1}, {1, 1}});
  auto const           iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK(iso->map == std::vector<Index>{1, 0});
  CHECK(verify_isomorphism(to_structure(a), to_structure(b), *iso));
}

TEST_CASE("left-zero and right-zero are not isomorphic") {
  CHECK_FALSE(find_isomorphism(tables::left_zero(2), tables::right_zero(2)));
  CHECK_FALSE(find_isomorphism(tables::left_zero(3), tables::chain_meet(3)));
}

TEST_CASE("mismatched signatures") {
  Structure a{2, {tables::left_zero(2).to_partial()}, {}};
  Structure b{2, {}, {{0, 1}}};
  CHECK_THROWS_AS(find_isomorphism(a, b), Error);
  Structure c{3, {tables::left_zero(3).to_partial()}, {}};
  CHECK_FALSE(find_isomorphism(a, c));
}

TEST_CASE("random relabellings are always recovered and certified") {
  std::mt19937 rng(2024);
  auto const   bands = enumerate_bands(4);
  for (int k = 0; k < 200; ++k) {
    auto const&        t = bands[rng() % bands.size()];
    auto const         p = oracle::random_permutation(t.order(), rng);
    std::vector<Index> perm(p.begin(), p.end());
    auto const         r   = t.relabel(perm);
    auto const         iso = find_isomorphism(t, r);
    REQUIRE(iso.has_value());
    CHECK(verify_isomorphism(to_structure(t), to_structure(r), *iso));
    CHECK(canonical_form(t) == canonical_form(r));
  }
}

TEST_CASE("search agrees with exhaustive permutation scan") {
  std::mt19937 rng(99);
  auto const   all = labelled_bands(3);
  for (int k = 0; k < 200; ++k) {
    auto const& a = all[rng() % all.size()];
    auto const& b = all[rng() % all.size()];
    bool const  brute
        = oracle::isomorphic({fixtures::rows(a)}, {fixtures::rows(b)});
    CHECK(find_isomorphism(a, b).has_value() == brute);
  }
}

TEST_CASE("partial tables: undefined cells must map to undefined cells") {
  PartialTable a(2, 2);
  a.at(0, 0) = 0;
  PartialTable b(2, 2);
  b.at(1, 1) = 1;
  Structure const sa{2, {a}, {}};
  Structure const sb{2, {b}, {}};
  auto const      iso = find_isomorphism(sa, sb);
  REQUIRE(iso.has_value());
  CHECK(iso->map == std::vector<Index>{1, 0});
  CHECK_FALSE(verify_isomorphism(sa, sb, Isomorphism::identity(2)));
}

TEST_CASE("isomorphism algebra") {
  Isomorphism const f{3, 3, {1, 2, 0}};
  CHECK(f.then(f.inverse()).is_identity());
  CHECK(f.inverse().then(f).is_identity());
  CHECK(f.then(f).map == std::vector<Index>{2, 0, 1});
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(to_structure(tables::cyclic_group(5))).size() == 4);
  CHECK(automorphisms(to_structure(tables::chain_meet(3))).size() == 1);
  CHECK(automorphisms(to_structure(tables::left_zero(3))).size() == 6);
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(tables::chain_meet(3)) == canonical_form(tables::chain_join(3)));
  CHECK_FALSE(canonical_form(tables::left_zero(3))
              == canonical_form(tables::right_zero(3)));
  CHECK_THROWS_AS(canonical_form(tables::left_zero(canonical_form_limit + 1)),
                  Error);
}
