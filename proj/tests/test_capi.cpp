#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <weyldft/weyldft.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

TEST_CASE("points and weights through the C interface") {
    char* out = nullptr;
    REQUIRE(wdft_points("A2", "1", 7, "json", 0, &out) == WDFT_OK);
    json pts = json::parse(out);
    wdft_string_free(out);
    CHECK(pts["algebra"] == "A2");
    CHECK(pts["sigma"] == "identity");
    CHECK(pts["M"] == 7);
    CHECK(pts["count"] == 12);
    CHECK(pts["points"].size() == 12);
    CHECK(pts["points"][0].contains("kac"));
    CHECK(pts["points"][0].contains("q"));
    CHECK(pts["points"][0].contains("eps"));

    out = nullptr;
    REQUIRE(wdft_weights("A2", "e", 7, "json", 0, &out) == WDFT_OK);
    json wts = json::parse(out);
    wdft_string_free(out);
    CHECK(wts["count"] == 5);
    CHECK(wts["weights"].size() == 5);
    CHECK(wts["weights"][0].contains("h"));

    out = nullptr;
    REQUIRE(wdft_points("C2", "s", 6, "csv", 0, &out) == WDFT_OK);
    std::string csv(out);
    wdft_string_free(out);
    CHECK(csv.rfind("kac_0", 0) == 0);  // header row first
    CHECK(csv.find("eps") != std::string::npos);
}

TEST_CASE("error mapping") {
    char* out = nullptr;
    CHECK(wdft_points("Z9", "1", 5, "json", 0, &out) == WDFT_INVALID_ALGEBRA);
    CHECK(std::strlen(wdft_last_error()) > 0);
    CHECK(wdft_points("A2", "s", 5, "json", 0, &out) == WDFT_INADMISSIBLE_SIGN);
    CHECK(wdft_points("A2", "e", 3, "json", 0, &out) == WDFT_LEVEL_TOO_SMALL);
    CHECK(wdft_points("A2", "e", 3, "json", 1, &out) == WDFT_OK);  // relaxed
    wdft_string_free(out);
    CHECK(wdft_points("A2", "1", 7, "xml", 0, &out) == WDFT_INVALID_ARGUMENT);
    long long a, b, c, d;
    CHECK(wdft_count("A2", "bogus", 7, &a, &b, &c, &d) == WDFT_INVALID_ARGUMENT);

    wdft_plan* plan = nullptr;
    CHECK(wdft_plan_create("E8", "1", 31, 0, 0, &plan) == WDFT_GROUP_TOO_LARGE);
    CHECK(plan == nullptr);
}

TEST_CASE("count agreement") {
    long long closed = 0, orbit = 0, weights = 0, points = 0;
    REQUIRE(wdft_count("A2", "1", 7, &closed, &orbit, &weights, &points) == WDFT_OK);
    CHECK(closed == 12);
    CHECK(orbit == 12);
    CHECK(weights == 12);
    CHECK(points == 12);
    REQUIRE(wdft_count("G2", "l", 10, &closed, &orbit, &weights, &points) == WDFT_OK);
    CHECK(closed == orbit);
    CHECK(closed == weights);
    CHECK(closed == points);
}

TEST_CASE("plan transforms and round trip") {
    wdft_plan* plan = nullptr;
    REQUIRE(wdft_plan_create("C2", "1", 6, 0, 0, &plan) == WDFT_OK);
    size_t np = 0, nl = 0;
    REQUIRE(wdft_plan_sizes(plan, &np, &nl) == WDFT_OK);
    CHECK(np == 10);
    CHECK(np == nl);

    std::vector<double> re(np), im(np), cre(nl), cim(nl), bre(np), bim(np);
    for (size_t i = 0; i < np; ++i) {
        re[i] = std::cos(0.7 * static_cast<double>(i));
        im[i] = std::sin(1.3 * static_cast<double>(i)) * 0.5;
    }
    REQUIRE(wdft_forward(plan, re.data(), im.data(), np, cre.data(), cim.data()) == WDFT_OK);
    REQUIRE(wdft_inverse(plan, cre.data(), cim.data(), nl, bre.data(), bim.data()) == WDFT_OK);
    for (size_t i = 0; i < np; ++i) {
        CHECK(std::abs(bre[i] - re[i]) < 1e-10);
        CHECK(std::abs(bim[i] - im[i]) < 1e-10);
    }
    CHECK(wdft_forward(plan, re.data(), im.data(), np - 1, cre.data(), cim.data()) ==
          WDFT_GRID_MISMATCH);

    std::vector<double> hf(np), hd(nl), hb(np);
    for (size_t i = 0; i < np; ++i) hf[i] = re[i];
    REQUIRE(wdft_hartley_forward(plan, hf.data(), np, hd.data()) == WDFT_OK);
    REQUIRE(wdft_hartley_inverse(plan, hd.data(), nl, hb.data()) == WDFT_OK);
    for (size_t i = 0; i < np; ++i) CHECK(std::abs(hb[i] - hf[i]) < 1e-10);

    double err = 1.0;
    REQUIRE(wdft_roundtrip_error(plan, 0, 42, 5, &err) == WDFT_OK);
    CHECK(err <= 1e-10);
    REQUIRE(wdft_roundtrip_error(plan, 1, 42, 5, &err) == WDFT_OK);
    CHECK(err <= 1e-10);
    wdft_plan_destroy(plan);
}

TEST_CASE("json transform front end") {
    wdft_plan* plan = nullptr;
    REQUIRE(wdft_plan_create("A2", "1", 7, 0, 0, &plan) == WDFT_OK);
    size_t np = 0, nl = 0;
    wdft_plan_sizes(plan, &np, &nl);

    json samples;
    samples["algebra"] = "A2";
    samples["sigma"] = "identity";
    samples["M"] = 7;
    samples["values"] = json::array();
    for (size_t i = 0; i < np; ++i) samples["values"].push_back(0.25 * static_cast<double>(i));
    char* out = nullptr;
    REQUIRE(wdft_transform_json(plan, samples.dump().c_str(), 0, &out) == WDFT_OK);
    json spec = json::parse(out);
    wdft_string_free(out);
    CHECK(spec["coefficients"].size() == nl);
    CHECK(spec["coefficients"][0].contains("kac"));
    CHECK(spec["coefficients"][0].contains("re"));

    // Header mismatch is rejected.
    samples["M"] = 8;
    CHECK(wdft_transform_json(plan, samples.dump().c_str(), 0, &out) == WDFT_GRID_MISMATCH);
    samples["M"] = 7;
    samples["values"].erase(0);
    CHECK(wdft_transform_json(plan, samples.dump().c_str(), 0, &out) == WDFT_GRID_MISMATCH);
    wdft_plan_destroy(plan);
}

TEST_CASE("verification endpoint with negative control") {
    char* out = nullptr;
    int ok = 0;
    REQUIRE(wdft_verify("A2", "1", 7, 0, 0, -1, &out, &ok) == WDFT_OK);
    json report = json::parse(out);
    wdft_string_free(out);
    CHECK(ok == 1);
    CHECK(report["all_passed"] == true);
    CHECK(report["checks"].size() >= 8);
    for (const auto& chk : report["checks"]) {
        CHECK(chk.contains("check"));
        CHECK(chk["pass"] == true);
    }

    out = nullptr;
    REQUIRE(wdft_verify("A2", "1", 7, 0, 0, 0, &out, &ok) == WDFT_OK);
    json bad = json::parse(out);
    wdft_string_free(out);
    CHECK(ok == 0);
    CHECK(bad["all_passed"] == false);
}
