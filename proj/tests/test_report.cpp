#include <doctest.h>

#include <algorithm>
#include <string>

#include "prd/errors.hpp"
#include "prd/report.hpp"

using nlohmann::json;

namespace {

prd::CurveReport sample_report() {
    const prd::DiscreteDistribution p({0.2, 0.3, 0.5});
    const prd::DiscreteDistribution q({0.6, 0.4, 0.0});
    prd::CurveReport r;
    r.metadata.mode = "hist";
    r.metadata.k = 3;
    r.metadata.resolution = 11;
    r.metadata.inputs = {{"p.json", "abc"}, {"q.json", "def"}};
    r.curve = prd::prd_curve(p, q, 11);
    r.max_precision = prd::max_precision(p, q);
    r.max_recall = prd::max_recall(p, q);
    r.tv_at_lambda1 = prd::tv_distance(p, q);
    r.f_beta = prd::f_beta_table(r.curve, {2.0, 8.0});
    return r;
}

}  // namespace

TEST_CASE("decimal formatting keeps 9 significant digits without exponents") {
    CHECK(prd::format_decimal(0.0) == "0");
    CHECK(prd::format_decimal(1.0) == "1.00000000");
    CHECK(prd::format_decimal(0.5) == "0.500000000");
    CHECK(prd::format_decimal(637.61905) == "637.619050");
    CHECK(prd::format_decimal(1.23456789e-5) == "0.0000123456789");
    CHECK(prd::format_decimal(9.9999999999) == "10.0000000");
    CHECK(prd::format_decimal(-0.25) == "-0.250000000");
}

TEST_CASE("curve CSV") {
    const auto r = sample_report();
    const std::string csv = prd::curve_csv(r.curve);
    CHECK(csv.rfind("lambda,precision,recall\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
    CHECK(csv.find('e', csv.find('\n')) == std::string::npos);  // no exponents in values
}

TEST_CASE("F_beta table always leads with 8 and 1/8") {
    const auto r = sample_report();
    REQUIRE(r.f_beta.size() == 3);
    CHECK(r.f_beta[0].beta_weight == 8.0);
    CHECK(r.f_beta[1].beta_weight == 0.125);
    CHECK(r.f_beta[2].beta_weight == 2.0);
}

TEST_CASE("JSON round trip and validation") {
    const auto r = sample_report();
    CHECK_FALSE(prd::validate_report(r).has_value());
    const json doc = prd::report_to_json(r);
    const auto back = prd::report_from_json(json::parse(doc.dump()));
    CHECK(back.curve.lambdas == r.curve.lambdas);
    REQUIRE(back.curve.size() == r.curve.size());
    for (std::size_t i = 0; i < r.curve.size(); ++i) {
        CHECK(back.curve.points[i] == r.curve.points[i]);
    }
    CHECK(back.max_precision == r.max_precision);
    CHECK(back.metadata.inputs[1].sha256 == "def");
    CHECK(back.f_beta.size() == 3);
    CHECK_FALSE(prd::validate_report(back).has_value());
}

TEST_CASE("validation catches broken rows") {
    auto r = sample_report();
    r.curve.points[3].precision += 0.01;
    CHECK(prd::validate_report(r).has_value());

    r = sample_report();
    r.curve.points[4].recall = 1.5;
    CHECK(prd::validate_report(r).has_value());

    r = sample_report();
    std::swap(r.curve.points[2], r.curve.points[8]);
    std::swap(r.curve.lambdas[2], r.curve.lambdas[8]);
    CHECK(prd::validate_report(r).has_value());

    r = sample_report();
    r.tv_at_lambda1 += 0.1;
    CHECK(prd::validate_report(r).has_value());
}

TEST_CASE("malformed reports name the key") {
    json doc = prd::report_to_json(sample_report());
    doc.erase("recall");
    try {
        prd::report_from_json(doc);
        FAIL("expected a FormatError");
    } catch (const prd::FormatError& e) {
        CHECK(e.field() == "recall");
    }
    CHECK_THROWS_AS(prd::report_from_json(json::array()), prd::FormatError);
    json wrong = prd::report_to_json(sample_report());
    wrong["format"] = "something-else";
    CHECK_THROWS_AS(prd::report_from_json(wrong), prd::FormatError);
}

TEST_CASE("histogram JSON") {
    const auto d = prd::histogram_from_json(json::parse(R"({"size": 2, "weights": [0.25, 0.75]})"),
                                            false);
    CHECK(d[1] == 0.75);
    CHECK(prd::histogram_to_json(d) == json::parse(R"({"size": 2, "weights": [0.25, 0.75]})"));

    const json unnormalized = json::parse(R"({"size": 2, "weights": [1, 3]})");
    CHECK_THROWS_AS(prd::histogram_from_json(unnormalized, false), prd::NormalizationError);
    const auto rescaled = prd::histogram_from_json(unnormalized, true);
    CHECK(rescaled[0] == 0.25);

    // Within the 1e-6 input tolerance.
    CHECK_NOTHROW(prd::histogram_from_json(
        json::parse(R"({"size": 2, "weights": [0.5, 0.5000005]})"), false));

    CHECK_THROWS_AS(prd::histogram_from_json(json::parse(R"({"size": 3, "weights": [1]})"), true),
                    prd::FormatError);
    CHECK_THROWS_AS(prd::histogram_from_json(json::parse(R"({"weights": [1]})"), true),
                    prd::FormatError);
    CHECK_THROWS_AS(
        prd::histogram_from_json(json::parse(R"({"size": 2, "weights": [-1, 2]})"), true),
        prd::FormatError);
}
