#include "wps/serialize.hpp"
#include "wps/survey.hpp"
#include "wps/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>

using namespace wps;
using nlohmann::json;

TEST_CASE("enum tags serialize as snake_case and round-trip") {
    CHECK(to_string(EinsteinTag::KaehlerEinsteinExists) == "kaehler_einstein_exists");
    CHECK(to_string(EinsteinTag::Obstructed) == "obstructed");
    CHECK(to_string(ConformalRegime::RicciFlatPunctured) == "ricci_flat_punctured");
    CHECK(to_string(CurvatureRegime::NonnegVanishesAtPoint) ==
          "nonneg_vanishes_at_point");
    for (auto t : {EinsteinTag::KaehlerEinsteinExists, EinsteinTag::EinsteinExists,
                   EinsteinTag::Obstructed, EinsteinTag::Unknown}) {
        CHECK(einstein_tag_from_string(to_string(t)) == t);
    }
    CHECK_THROWS_AS(einstein_tag_from_string("bogus"), Error);
}

TEST_CASE("PiSurd JSON shape") {
    PiSurd x{Rational(48), Rational(1, 30)};
    json j = to_json(x);
    CHECK(j.at("coeff") == "48/1");
    CHECK(j.at("radicand") == "1/30");
    CHECK(j.at("approx").get<double>() == doctest::Approx(27.5315).epsilon(1e-4));
    CHECK(pi_surd_from_json(j) == x);
}

TEST_CASE("classification JSON round-trips") {
    SplitMix64 rng(11);
    int done = 0;
    while (done < 25) {
        std::int64_t a = rng.draw(400), b = rng.draw(400), c = rng.draw(400);
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        std::array<std::int64_t, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        Classification cls = classify(validate_weights(t[0], t[1], t[2]));
        json j = to_json(cls);
        CHECK(classification_from_json(j) == cls);
        // serialized form itself is stable
        CHECK(json::parse(j.dump()) == j);
        ++done;
    }
}

TEST_CASE("classification JSON exposes the headline top-level fields") {
    json j = to_json(classify(validate_weights(1, 1, 4)));
    CHECK(j.at("einstein") == "obstructed");
    CHECK(j.at("ht_deficit") == "0/1");
    j = to_json(classify(validate_weights(1, 1, 1)));
    CHECK(j.at("einstein") == "kaehler_einstein_exists");
    CHECK(j.at("kaehler_einstein") == true);
}

TEST_CASE("survey records round-trip through JSON") {
    for (const auto& rec : run_survey(9)) {
        CHECK(survey_record_from_json(to_json(rec)) == rec);
    }
}

TEST_CASE("survey CSV is one fixed-width header plus one line per record") {
    auto recs = run_survey(3);
    REQUIRE(recs.size() == 4);
    CHECK(survey_csv_header() ==
          "r,q,p,einstein,regime,ht_deficit,yamabe_exact,yamabe_lower,"
          "yamabe_upper,effective_exact,effective_linear");
    CHECK(survey_csv_row(recs[0]) ==
          "1,1,1,kaehler_einstein_exists,positive_einstein,3/1,,"
          "4/1*pi*sqrt(18/1),12/1*pi*sqrt(2/1),true,true");
    for (const auto& rec : recs) {
        std::string row = survey_csv_row(rec);
        CHECK(std::count(row.begin(), row.end(), ',') == 10);
    }
}

TEST_CASE("survey filters and histogram") {
    auto all = run_survey(5);
    CHECK(all.size() == 12);
    auto hist = survey_histogram(all);
    CHECK(hist["kaehler_einstein_exists"] == 1);
    CHECK(hist["einstein_exists"] == 1);
    CHECK(hist["obstructed"] == 2);
    CHECK(hist["unknown"] == 8);

    auto obstructed = run_survey(5, std::string("obstructed"));
    CHECK(obstructed.size() == 2);
    auto crit = run_survey(5, std::string("ricci_flat_punctured"));
    CHECK(crit.size() == 5);
    CHECK_THROWS_AS(run_survey(5, std::string("nope")), Error);
}

TEST_CASE("text rendering mentions the headline facts") {
    std::string txt = classification_to_text(classify(validate_weights(2, 3, 5)));
    CHECK(txt.find("CP^2_(2,3,5)") != std::string::npos);
    CHECK(txt.find("unknown") != std::string::npos);
    CHECK(txt.find("ricci_flat_punctured") != std::string::npos);
    CHECK(txt.find("4/5") != std::string::npos);
}
