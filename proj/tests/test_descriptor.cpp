#include <doctest.h>

#include <stdexcept>
#include <variant>

#include "kstab/descriptor.hpp"
#include "kstab/errors.hpp"
#include "kstab/serialize.hpp"
#include "kstab/toml_lite.hpp"

using kstab::Json;
using kstab::ParseError;
using kstab::Rational;

TEST_CASE("toml subset maps onto json") {
    const auto j = kstab::toml_to_json(R"(
# a comment
type = "p1"            # trailing comment
label = "demo \"quoted\""
count = 3
negative = -2
flag = true

points = [
  { at = "0", c = "1/2" },
  { at = "inf", c = "1/2" },
]

[meta]
nested.key = "x"
)");
    CHECK(j["type"] == "p1");
    CHECK(j["label"] == "demo \"quoted\"");
    CHECK(j["count"] == 3);
    CHECK(j["negative"] == -2);
    CHECK(j["flag"] == true);
    CHECK(j["points"].size() == 2);
    CHECK(j["points"][1]["at"] == "inf");
    CHECK(j["meta"]["nested"]["key"] == "x");
}

TEST_CASE("toml subset: nested arrays") {
    const auto j = kstab::toml_to_json("rays = [[1, 0], [0, 1], [-1, -1]]\n");
    CHECK(j["rays"].size() == 3);
    CHECK(j["rays"][2][0] == -1);
}

TEST_CASE("toml subset rejects what it does not support, with line numbers") {
    CHECK_THROWS_AS(kstab::toml_to_json("x = 1.5\n"), ParseError);
    CHECK_THROWS_AS(kstab::toml_to_json("x = [1,\n"), ParseError);
    CHECK_THROWS_AS(kstab::toml_to_json("x = \"unterminated\n"), ParseError);
    CHECK_THROWS_AS(kstab::toml_to_json("[[tables]]\nx = 1\n"), ParseError);
    CHECK_THROWS_AS(kstab::toml_to_json("x = 1\nx = 2\n"), ParseError);   // duplicate
    CHECK_THROWS_AS(kstab::toml_to_json("x 1\n"), ParseError);            // missing '='
    CHECK_THROWS_AS(kstab::toml_to_json("x = 99999999999999999999\n"), ParseError);
    try {
        kstab::toml_to_json("ok = 1\nbad = 1.5\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("descriptors parse from json") {
    SUBCASE("p1") {
        const auto d = kstab::parse_descriptor_text(R"({
          "type": "p1",
          "label": "demo",
          "points": [{"at": "0", "c": "1/2"}, {"at": "inf", "c": "1/2"}]
        })");
        const auto* pair = std::get_if<kstab::P1Pair>(&d.pair);
        REQUIRE(pair != nullptr);
        CHECK(d.label == "demo");
        CHECK(pair->degree() == Rational(1));
        // Integer literals are accepted for points and coefficients too.
        const auto d2 = kstab::parse_descriptor_text(
            R"({"type": "p1", "points": [{"at": 2, "c": "1/3"}]})");
        CHECK(std::get_if<kstab::P1Pair>(&d2.pair)->marked_points()[0].at ==
              kstab::P1Point::finite(Rational(2)));
    }
    SUBCASE("toric") {
        const auto d = kstab::parse_descriptor_text(R"({
          "type": "toric",
          "rays": [[1,0],[0,1],[-1,-1]],
          "cones": [[0,1],[1,2],[2,0]],
          "coefficients": ["1/3", "0", "1/5"]
        })");
        const auto* fan = std::get_if<kstab::FanPair>(&d.pair);
        REQUIRE(fan != nullptr);
        CHECK(fan->dimension() == 2);
        CHECK(fan->coefficients()[0] == Rational(1, 3));
    }
    SUBCASE("toric coefficients default to zero") {
        const auto d = kstab::parse_descriptor_text(
            R"({"type": "toric", "rays": [[1,0],[0,1],[-1,-1]], "cones": [[0,1],[1,2],[2,0]]})");
        CHECK(std::get_if<kstab::FanPair>(&d.pair)->coefficients() ==
              std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
    }
    SUBCASE("plane divisor") {
        const auto d = kstab::parse_descriptor_text(R"({"type": "plane-divisor", "d": 3})");
        CHECK(std::get_if<kstab::PlaneDivisorCase>(&d.pair)->d == 3);
    }
    SUBCASE("weighted blowup") {
        const auto d = kstab::parse_descriptor_text(
            R"({"type": "weighted-blowup", "a": 2, "b": 1, "tau": "5"})");
        const auto* wb = std::get_if<kstab::WeightedBlowupDescriptor>(&d.pair);
        REQUIRE(wb != nullptr);
        CHECK(wb->a == 2);
        CHECK(wb->tau == Rational(5));
    }
}

TEST_CASE("the toml front end produces the same canonical echo as json") {
    const auto from_json = kstab::parse_descriptor_text(R"({
      "type": "p1",
      "label": "demo",
      "points": [{"at": "0", "c": "1/2"}, {"at": "inf", "c": "1/2"}]
    })");
    const auto from_toml = kstab::parse_descriptor_text(
        "type = \"p1\"\n"
        "label = \"demo\"\n"
        "points = [\n"
        "  { at = \"0\", c = \"1/2\" },\n"
        "  { at = \"inf\", c = \"1/2\" },\n"
        "]\n");
    CHECK(kstab::descriptor_to_json(from_json) == kstab::descriptor_to_json(from_toml));
    CHECK(kstab::descriptor_to_json(from_json).dump() ==
          kstab::descriptor_to_json(from_toml).dump());
}

TEST_CASE("descriptor errors") {
    // Malformed JSON surfaces as ParseError, not a json exception.
    CHECK_THROWS_AS(kstab::parse_descriptor_text("{\"type\": }"), ParseError);
    CHECK_THROWS_AS(kstab::parse_descriptor_text("{}"), ParseError);  // missing type
    CHECK_THROWS_AS(kstab::parse_descriptor_text(R"({"type": "nope"})"), ParseError);
    CHECK_THROWS_AS(kstab::parse_descriptor_text(R"({"type": "p1"})"), ParseError);
    CHECK_THROWS_AS(
        kstab::parse_descriptor_text(R"({"type": "p1", "points": [{"at": "0"}]})"),
        ParseError);
    // Well-formed text, bad geometry: the library's own validation speaks.
    CHECK_THROWS_AS(kstab::parse_descriptor_text(
                        R"({"type": "p1", "points": [{"at": "0", "c": "3/2"}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(kstab::parse_descriptor_text(
                        R"({"type": "weighted-blowup", "a": 4, "b": 2})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(kstab::load_descriptor("/nonexistent/path.json"), ParseError);
}

TEST_CASE("volume curves serialize and re-validate") {
    const auto res =
        kstab::weighted_blowup_report(kstab::WeightedBlowupDescriptor(2, 1, Rational(5)));
    const Json j = kstab::curve_to_json(res.curve);
    CHECK(j["dimension"] == 2);
    CHECK(j["total_volume"] == "9");
    CHECK(j["tau"] == "5");
    const auto back = kstab::curve_from_json(j);
    CHECK(kstab::equivalent(back.body(), res.curve.body()));
    CHECK(back.total_volume() == res.curve.total_volume());

    // Tampered payloads fail the curve validation on the way back in.
    Json bad = j;
    bad["pieces"][0][0] = "8";  // vol(0) != total_volume
    CHECK_THROWS_AS(kstab::curve_from_json(bad), std::invalid_argument);
    Json malformed = j;
    malformed.erase("pieces");
    CHECK_THROWS_AS(kstab::curve_from_json(malformed), ParseError);
}

TEST_CASE("reports serialize with exact strings, floats only on request") {
    const auto report = kstab::plane_divisor_report(kstab::PlaneDivisorCase(2));
    const Json plain = kstab::report_to_json(report);
    CHECK(plain["betahat"] == "1/2");
    CHECK(plain["S"] == "1/2");
    CHECK(!plain.contains("approx"));
    const Json with_float = kstab::report_to_json(report, true);
    CHECK(with_float["approx"]["betahat"] == 0.5);
}
