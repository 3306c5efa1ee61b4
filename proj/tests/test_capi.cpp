#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "hmsing.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string r(s);
    hmsing_string_free(s);
    return r;
}

}  // namespace

TEST_CASE("version and error state") {
    const char* v = hmsing_version();
    REQUIRE(v != nullptr);
    CHECK(std::strlen(v) > 0);
    REQUIRE(hmsing_last_error() != nullptr);
}

TEST_CASE("chi endpoint") {
    char* out = nullptr;
    hmsing_status st =
        hmsing_chi(R"({"n": 3, "degrees": [4], "chi_y": true})", &out);
    REQUIRE(st == HMSING_OK);
    json r = json::parse(take(out));
    CHECK(r["schema"] == 1);
    CHECK(r["euler"] == "24");
    CHECK(r["chi_y"]["y^1"] == "-20");

    // Malformed JSON.
    out = nullptr;
    st = hmsing_chi("{not json", &out);
    CHECK(st == HMSING_ERROR_JSON);
    CHECK(out == nullptr);
    CHECK(std::strlen(hmsing_last_error()) > 0);

    // Valid JSON, invalid mathematics.
    out = nullptr;
    st = hmsing_chi(R"({"n": 2, "degrees": [2, 2, 2]})", &out);
    CHECK(st == HMSING_ERROR_INVALID_ARGUMENT);
    CHECK(out == nullptr);

    // Null pointers are rejected, not dereferenced.
    CHECK(hmsing_chi(nullptr, &out) == HMSING_ERROR_INVALID_ARGUMENT);
    CHECK(hmsing_chi("{}", nullptr) == HMSING_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("two-factor family endpoint") {
    char* out = nullptr;
    REQUIRE(hmsing_example_2_8(R"({"n": 3, "a1": 2, "a2": 2, "b1": 2, "b2": 2})", &out) ==
            HMSING_OK);
    json r = json::parse(take(out));
    CHECK(r["delta_iterated"] == "16");
    CHECK(r["delta_direct"] == "16");
    CHECK(r["chi_X"] == "8");
    CHECK(r["milnor_class_iterated"] == r["milnor_class_direct"]);
}

TEST_CASE("milnor class endpoint") {
    char* out = nullptr;
    REQUIRE(hmsing_milnor_class(
                R"({"n": 3, "m": 2, "r": 1, "em_class": ["0", "1", "0", "0"]})", &out) ==
            HMSING_OK);
    json r = json::parse(take(out));
    CHECK(r["milnor_class_direct"][0] == "-2");
    CHECK(r["milnor_class_direct"][1] == "1");
    CHECK(r["formulas_agree"] == true);
}

TEST_CASE("spectrum endpoint") {
    char* out = nullptr;
    REQUIRE(hmsing_spectrum(R"({"bp": [2, 3], "cover": 2, "resolution": [[4, 6]]})", &out) ==
            HMSING_OK);
    json r = json::parse(take(out));
    CHECK(r["germ"]["mu"] == "2");
    CHECK(r["germ"]["min_exponent"] == "5/6");
    CHECK(r["germ"]["lct"] == "5/6");
    CHECK(r["germ"]["du_bois"] == false);
    CHECK(r["lct_from_resolution"] == "5/6");
    CHECK(r["rational_after_cover"] == true);
    CHECK(r["jumping_coefficients"][0] == "5/6");
}

TEST_CASE("hypersurface endpoint") {
    char* out = nullptr;
    REQUIRE(hmsing_hypersurface(R"({"n": 2, "m": 3, "germs": [[2, 2]]})", &out) == HMSING_OK);
    json r = json::parse(take(out));
    CHECK(r["M_y"]["y^1"] == "1");
    CHECK(r["chi_y"]["y^1"] == "-1");
    CHECK(r["M_0_total"] == "0");
    CHECK(r["du_bois"] == true);
    CHECK(r["euler"] == "1");
}

TEST_CASE("arrangement endpoint") {
    char* out = nullptr;
    REQUIRE(hmsing_arrangement(
                R"({"n": 2, "forms": [["1","0","0"], ["0","1","0"], ["1","1","1"]]})", &out) ==
            HMSING_OK);
    json r = json::parse(take(out));
    CHECK(r["euler"] == "3");
    CHECK(r["flats"].size() == 6);

    out = nullptr;
    CHECK(hmsing_arrangement(R"({"n": 2, "forms": [["1","0","0"], ["2","0","0"]]})", &out) ==
          HMSING_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(hmsing_last_error()) == "repeated hyperplane");
}

TEST_CASE("spectrum handles") {
    hmsing_germ* a = nullptr;
    hmsing_germ* b = nullptr;
    hmsing_germ* j = nullptr;
    REQUIRE(hmsing_germ_power(2, &a) == HMSING_OK);
    int exps[2] = {2, 3};
    REQUIRE(hmsing_germ_brieskorn_pham(exps, 2, &b) == HMSING_OK);
    REQUIRE(hmsing_germ_join(a, b, &j) == HMSING_OK);

    char* out = nullptr;
    REQUIRE(hmsing_germ_describe(j, &out) == HMSING_OK);
    json r = json::parse(take(out));
    CHECK(r["germ"]["num_vars"] == 3);
    CHECK(r["germ"]["mu"] == "2");
    CHECK(r["germ"]["min_exponent"] == "4/3");
    CHECK(r["germ"]["symmetric"] == true);

    hmsing_germ_free(a);
    hmsing_germ_free(b);
    hmsing_germ_free(j);
    hmsing_germ_free(nullptr);  // must be a no-op

    hmsing_germ* bad = nullptr;
    CHECK(hmsing_germ_power(1, &bad) == HMSING_ERROR_INVALID_ARGUMENT);
    CHECK(bad == nullptr);
    CHECK(hmsing_germ_join(nullptr, nullptr, &bad) == HMSING_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("verification endpoints") {
    char* out = nullptr;
    REQUIRE(hmsing_verify_suites(&out) == HMSING_OK);
    json names = json::parse(take(out));
    CHECK(names.is_array());
    CHECK(names.size() >= 10);

    out = nullptr;
    REQUIRE(hmsing_verify("identity-2-7-1", R"({"m_max": 4, "order": 12})", &out) == HMSING_OK);
    json r = json::parse(take(out));
    CHECK(r["ok"] == true);
    CHECK(r["suites"][0]["suite"] == "identity-2-7-1");
    CHECK(r["suites"][0]["failures"].empty());

    out = nullptr;
    CHECK(hmsing_verify("no-such-suite", nullptr, &out) == HMSING_ERROR_INVALID_ARGUMENT);
}
