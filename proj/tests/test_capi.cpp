// Exercises the shared library through its C header only.
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "skewind/skewind.h"

using json = nlohmann::json;

namespace {

  std::string take(char* s) {
    std::string out = s == nullptr ? std::string() : std::string(s);
    skw_string_free(s);
    return out;
  }

  char const* rectangular2 =
      R"({"order": 2, "ops": {"meet": [[0, 0], [1, 1]], "join": [[0, 1], [0, 1]]}})";
  char const* broken2 =
      R"({"order": 2, "ops": {"meet": [[0, 0], [1, 1]], "join": [[0, 0], [0, 1]]}})";

}  // namespace

TEST_CASE("version and argument errors") {
  CHECK(std::string(skw_version()).size() > 0);
  skw_skew_lattice* s = nullptr;
  CHECK(skw_skew_lattice_from_json(nullptr, &s) == SKW_ERR_ARGUMENT);
  CHECK(skw_skew_lattice_from_json("{oops", &s) == SKW_ERR_MALFORMED);
  CHECK(s == nullptr);
  CHECK(std::string(skw_last_error()).size() > 0);
  CHECK(std::string(skw_last_error_kind()) == "malformed-input");
}

TEST_CASE("checking a skew lattice") {
  skw_skew_lattice* s = nullptr;
  REQUIRE(skw_skew_lattice_from_json(rectangular2, &s) == SKW_OK);
  skw_report* r = nullptr;
  REQUIRE(skw_check_skew_lattice(s, &r) == SKW_OK);
  CHECK(skw_report_passed(r) == 1);
  CHECK(skw_report_first_failing_section(r) == -1);
  CHECK(skw_report_section_count(r) == 1);
  skw_report_free(r);

  char* text = nullptr;
  REQUIRE(skw_skew_lattice_to_json(s, &text) == SKW_OK);
  CHECK(json::parse(take(text)) == json::parse(rectangular2));
  skw_skew_lattice_free(s);

  REQUIRE(skw_skew_lattice_from_json(broken2, &s) == SKW_OK);
  REQUIRE(skw_check_skew_lattice(s, &r) == SKW_OK);
  CHECK(skw_report_passed(r) == 0);
  CHECK(skw_report_first_failing_section(r) == 0);
  REQUIRE(skw_report_to_json(r, &text) == SKW_OK);
  auto const j = json::parse(take(text));
  REQUIRE(j.is_array());
  CHECK(j[0]["pass"] == false);
  REQUIRE(skw_report_summary(r, &text) == SKW_OK);
  CHECK_FALSE(take(text).empty());
  skw_report_free(r);
  skw_skew_lattice_free(s);
}

TEST_CASE("enumeration") {
  char* text = nullptr;
  REQUIRE(skw_enumerate_bands(3, 4, &text) == SKW_OK);
  CHECK(json::parse(take(text)).size() == 10);
  REQUIRE(skw_enumerate_skew_lattices(3, 4, &text) == SKW_OK);
  CHECK(json::parse(take(text)).size() == 7);
  CHECK(skw_enumerate_bands(5, 4, &text) == SKW_ERR_BOUND);
  CHECK(text == nullptr);
}

TEST_CASE("models, algebras and round trips") {
  skw_model_suite* suite = nullptr;
  CHECK(skw_generate_models(7, 2, &suite) == SKW_ERR_BOUND);
  REQUIRE(skw_generate_models(2, 2, &suite) == SKW_OK);
  REQUIRE(skw_model_suite_size(suite) > 1);
  CHECK(skw_model_suite_name(suite, 1000) == nullptr);

  for (std::size_t i = 0; i < skw_model_suite_size(suite); ++i) {
    CAPTURE(skw_model_suite_name(suite, i));
    char* text = nullptr;
    REQUIRE(skw_model_suite_instance_json(suite, i, &text) == SKW_OK);
    auto const doc = take(text);

    skw_algebra* a = nullptr;
    REQUIRE(skw_algebra_from_json(doc.c_str(), &a) == SKW_OK);
    skw_report* r = nullptr;
    REQUIRE(skw_check_algebra(a, &r) == SKW_OK);
    CHECK(skw_report_passed(r) == 1);
    skw_report_free(r);

    skw_system* s = nullptr;
    REQUIRE(skw_system_from_json(doc.c_str(), &s) == SKW_OK);
    REQUIRE(skw_check_system(s, &r) == SKW_OK);
    CHECK(skw_report_passed(r) == 1);
    skw_report_free(r);

    skw_action* act = nullptr;
    REQUIRE(skw_action_from_json(doc.c_str(), &act) == SKW_OK);
    REQUIRE(skw_check_action(act, &r) == SKW_OK);
    CHECK(skw_report_passed(r) == 1);
    skw_report_free(r);
    skw_action_free(act);

    skw_algebra* built = nullptr;
    REQUIRE(skw_build_algebra(s, &built) == SKW_OK);
    skw_system* back = nullptr;
    REQUIRE(skw_reconstruct(built, &back) == SKW_OK);
    REQUIRE(skw_roundtrip_system(s, &text) == SKW_OK);
    auto const iso = json::parse(take(text));
    CHECK(iso.contains("objects"));
    CHECK(iso.contains("morphisms"));
    REQUIRE(skw_roundtrip_algebra(a, &text) == SKW_OK);
    CHECK(json::parse(take(text)).is_array());

    int found = -1;
    REQUIRE(skw_anti_automorphism_witness(a, &found, &text) == SKW_OK);
    CHECK((found == 0 || found == 1));
    if (found == 1) {
      CHECK(json::parse(take(text)).contains("op"));
    } else {
      CHECK(text == nullptr);
    }

    skw_system_free(back);
    skw_algebra_free(built);
    skw_system_free(s);
    skw_algebra_free(a);
  }
  skw_model_suite_free(suite);
}

TEST_CASE("a broken algebra is a precondition failure for reconstruction") {
  char const* doc =
      R"({"order": 2, "join": [[0, 0], [0, 0]], "meet": [[0, 0], [1, 1]], "star": [0, 1]})";
  skw_algebra* a = nullptr;
  REQUIRE(skw_algebra_from_json(doc, &a) == SKW_OK);
  skw_system* s = nullptr;
  CHECK(skw_reconstruct(a, &s) == SKW_ERR_PRECONDITION);
  CHECK(s == nullptr);
  skw_report* r = nullptr;
  REQUIRE(skw_check_algebra(a, &r) == SKW_OK);
  CHECK(skw_report_passed(r) == 0);
  CHECK(skw_report_first_failing_section(r) >= 0);
  skw_report_free(r);
  skw_algebra_free(a);
}
