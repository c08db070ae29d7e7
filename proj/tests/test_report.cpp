#include <doctest.h>

#include "cgobstruct/knot_parse.hpp"
#include "cgobstruct/report.hpp"

using namespace cgo;

TEST_CASE("report JSON layout")
{
    const auto knot = parse_knot("T(2,3;2,13) # -T(2,5;2,13) # T(2,7;2,13) # -T(2,1;2,13)");
    VerifyOptions opts;
    opts.max_witnesses = 2;
    const auto rep = genus_lower_bound(knot, 1, opts);
    const auto diag = sliceness_diagnostics(knot, 50);
    const auto j = report_to_json(rep, diag);

    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["knot"] == format_knot(knot));
    CHECK(j["family"].is_null());
    CHECK(j["genus_hypothesis"] == 1);
    REQUIRE(j["primes"].size() == 1);
    const auto& pr = j["primes"][0];
    CHECK(pr["p"] == 13);
    CHECK(pr["points"] == 14 * 14);
    CHECK(pr["witnesses"].size() <= 2);
    for (const auto& w : pr["witnesses"]) {
        CHECK(w["sigma"].is_string());
        CHECK(13 % Rational::parse(w["sigma"].get<std::string>()).den() == 0);
    }
    CHECK(j["genus"]["upper_bound"].is_null());
    CHECK(j["diagnostics"]["signature_function"]["resolution"] == 50);
    CHECK(j["diagnostics"]["fox_milnor"]["satisfied"].is_boolean());

    CHECK(Json::parse(j.dump()) == j);
    CHECK(report_to_json(rep, diag).dump() == j.dump());
}

TEST_CASE("family report carries the recorded upper bound")
{
    const auto rep = genus_lower_bound(build_family(83, 103, 17, 11, 13), 1);
    const auto j = report_to_json(rep);
    CHECK(j["family"] == Json::array({83, 103, 17, 11, 13}));
    CHECK(j["genus"]["lower_bound"] == 2);
    CHECK(j["genus"]["upper_bound"] == 2);
    CHECK(j["genus"]["hypotheses_refuted"] == Json::array({1}));
    CHECK(j["genus"]["conclusion"] == "g₄^top = g₄ = 2");
    CHECK_FALSE(j.contains("diagnostics"));
    for (const auto& p : j["primes"]) CHECK(p["first_unwitnessed"].is_null());

    const auto text = report_to_text(rep);
    CHECK(text.find("g₄^top = g₄ = 2") != std::string::npos);
    CHECK(text.find("7056") != std::string::npos);
    CHECK(text.find("10816") != std::string::npos);
}
