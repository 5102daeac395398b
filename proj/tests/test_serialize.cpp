#include <catch2/catch_amalgamated.hpp>

#include "minknot/serialize.hpp"

using namespace minknot;

TEST_CASE("polynomial json round-trips, including big coefficients") {
    LaurentPoly p;
    p.set(-3, BigInt(7));
    p.set(0, BigInt(-2));
    p.set(5, BigInt("123456789012345678901234567890"));
    json j = poly_json(p);
    CHECK(j["5"].is_string());  // beyond int64
    CHECK(j["-3"] == 7);
    CHECK(poly_from_json(j) == p);

    CHECK_THROWS_AS(poly_from_json(json::array()), schema_error);
    CHECK_THROWS_AS(poly_from_json(json{{"x", 1}}), schema_error);
    CHECK_THROWS_AS(poly_from_json(json{{"1", 1.5}}), schema_error);
}

TEST_CASE("braid word json uses signed letters") {
    BraidWord w{3, {1, -2, 1, -2}};
    json j = word_json(w);
    CHECK(j["strands"] == 3);
    CHECK(j["letters"].get<std::vector<int>>() == w.letters);
}

TEST_CASE("rational json is the exact fraction string") {
    CHECK(rational_json(Rational(3, 8)) == "3/8");
    CHECK(Rational::parse(rational_json(Rational(-5, 12)).get<std::string>()) ==
          Rational(-5, 12));
}

TEST_CASE("crossing report json carries the verdict") {
    KnotParams kp = validate(3, 4, 4, canonical_phase(3, 4, 4));
    BraidBuild b = build_braid(kp);
    CrossingReport rep = certify_schedule(b.crossings, CurveSampler{kp, 0});
    json j = report_json(rep);
    CHECK(j["matched"] == 8);
    CHECK(j["clean"] == true);
    CHECK(j["missing"].empty());
}
