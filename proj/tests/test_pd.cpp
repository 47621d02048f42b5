#include "doctest.h"

#include "tapoly/knot_table.hpp"
#include "tapoly/twisted.hpp"
#include "tapoly/wirtinger.hpp"

using namespace tapoly;

namespace {
const char* trefoil_pd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
}

TEST_CASE("pd parsing and validation") {
    KnotDiagram d = parse_pd(trefoil_pd);
    CHECK(d.crossing_count() == 3);
    CHECK(d.writhe() == -3);
    CHECK(parse_pd(pd_to_string(d)).crossings.size() == 3);

    CHECK_THROWS_AS(parse_pd(""), pd_error);
    CHECK_THROWS_WITH_AS(parse_pd("X[1,2,3]"), doctest::Contains("','"), pd_error);

    try {
        parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,4]"); // label 4 thrice, 3 once
        FAIL("expected multiplicity error");
    } catch (const pd_error& e) {
        CHECK(e.kind == PdErrorKind::multiplicity);
    }

    try {
        // two-component link: hopf link
        parse_pd("X[4,1,3,2] X[2,3,1,4]");
        FAIL("expected multicomponent error");
    } catch (const pd_error& e) {
        CHECK(e.kind == PdErrorKind::multicomponent);
    }
}

TEST_CASE("wirtinger presentation of the trefoil") {
    WirtingerData w = wirtinger(parse_pd(trefoil_pd), "3_1_pd");
    CHECK(w.pres.gen_count == 3);
    CHECK(w.pres.relators.size() == 2);
    CHECK(w.meridian == Word::gen(0));
    REQUIRE(w.longitude.has_value());
    CHECK(w.longitude->exponent_sum() == 0);
    // diagram validated through its Alexander polynomial
    CHECK(classical_alexander(w) == LaurentPoly::parse("t^2 - t + 1", Ring::integers()));
}

TEST_CASE("deficiency one for every ingested diagram") {
    for (const auto& [name, d] : parse_pd_file(builtin_pd_table())) {
        WirtingerData w = wirtinger(d, name);
        CHECK(w.pres.relators.size() == static_cast<size_t>(w.pres.gen_count) - 1);
        CHECK(w.longitude->exponent_sum() == 0);
    }
}

TEST_CASE("presentation file round trip is exact") {
    WirtingerData w = builtin_knot("3_1");
    std::string text = presentation_to_string(w);
    WirtingerData back = parse_presentation(text);
    CHECK(presentation_to_string(back) == text);
    CHECK(back.pres.relators == w.pres.relators);
    CHECK(back.meridian == w.meridian);
    CHECK(back.longitude == w.longitude);
}

TEST_CASE("pd file round trip is a fixed point") {
    std::string once = pd_file_to_string(parse_pd_file(builtin_pd_table()));
    std::string twice = pd_file_to_string(parse_pd_file(once));
    CHECK(once == twice);
}

TEST_CASE("builtin names and errors") {
    CHECK_THROWS_WITH_AS(builtin_knot("9_99"), doctest::Contains("available"), error);
    for (const std::string& name : builtin_knot_names()) CHECK_NOTHROW(builtin_knot(name));
}

TEST_CASE("alexander polynomial is stable under Reidemeister moves") {
    // trefoil variants: the standard code, both first-move kinks, and a
    // second-move poke of the middle strand pair
    const char* variants[] = {
        "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
        "X[1,3,2,2] X[3,6,4,7] X[5,8,6,1] X[7,4,8,5]",
        "X[1,2,2,3] X[3,6,4,7] X[5,8,6,1] X[7,4,8,5]",
        "X[1,8,2,9] X[5,10,6,1] X[9,4,10,5] X[7,3,8,2] X[6,3,7,4]",
    };
    LaurentPoly trefoil = LaurentPoly::parse("t^2 - t + 1", Ring::integers());
    for (const char* pd : variants) {
        WirtingerData w = wirtinger(parse_pd(pd), "variant");
        CHECK(classical_alexander(w) == trefoil);
        CHECK(w.longitude->exponent_sum() == 0);
    }
}

TEST_CASE("right-handed trefoil diagram reproduces the stored presentation") {
    WirtingerData pd = wirtinger(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"), "3_1");
    WirtingerData stored = builtin_knot("3_1");
    CHECK(pd.pres.relators == stored.pres.relators);
    CHECK(pd.meridian == stored.meridian);
    CHECK(*pd.longitude == *stored.longitude);
}

TEST_CASE("two-bridge normal form agrees with the diagrams") {
    // sanity ladder for the fraction-based builtin entries
    struct Case { i64 p, q; const char* alex; };
    for (Case c : {Case{3, 1, "t^2 - t + 1"}, Case{5, 3, "t^2 - 3*t + 1"},
                   Case{5, 1, "t^4 - t^3 + t^2 - t + 1"}, Case{7, 3, "2*t^2 - 3*t + 2"},
                   Case{27, 17, "2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2"}}) {
        WirtingerData w = two_bridge(c.p, c.q, "tb");
        CHECK(classical_alexander(w) == LaurentPoly::parse(c.alex, Ring::integers()));
    }
    CHECK_THROWS_AS(two_bridge(27, 8, "even q"), error);
    CHECK_THROWS_AS(two_bridge(9, 3, "not coprime"), error);
}
