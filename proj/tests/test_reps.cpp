#include "doctest.h"

#include "oracles.hpp"
#include "tapoly/knot_table.hpp"
#include "tapoly/reps.hpp"

#include <set>

using namespace tapoly;

TEST_CASE("sl2 basics") {
    CHECK(sl2_elements(2).size() == 6);
    CHECK(sl2_elements(3).size() == 24);
    CHECK(sl2_elements(5).size() == 120);
    for (const Mat2& m : sl2_elements(3)) {
        CHECK(m2_det(m, 3) == 1);
        CHECK(m2_mul(m, m2_inv_sl2(m, 3), 3).is_identity());
    }
    // class representatives partition the group
    size_t total = 0;
    for (const Mat2& r : sl2_class_reps(5)) total += sl2_conjugacy_class(r, 5).size();
    CHECK(total == 120);
}

TEST_CASE("rep_check and is_nonabelian") {
    WirtingerData k = builtin_knot("3_1");
    Rep2 trivial{5, std::vector<Mat2>(3, m2_identity())};
    CHECK(rep_check(trivial, k.pres));
    CHECK_FALSE(is_nonabelian(trivial));

    auto reps = enumerate_reps(k, 5, {});
    REQUIRE(!reps.empty());
    for (const Rep2& r : reps) {
        CHECK(rep_check(r, k.pres));
        CHECK(is_nonabelian(r));
        // all generator images share one trace
        i64 tr = m2_trace(r.images[0], 5);
        for (const Mat2& m : r.images) CHECK(m2_trace(m, 5) == tr);
    }

    // perturbing an entry of a valid rep breaks it
    Rep2 bad = reps.front();
    bad.images[1].b = mod_norm(bad.images[1].b + 1, 5);
    CHECK_FALSE(rep_check(bad, k.pres));
}

TEST_CASE("enumeration matches brute force on small presentations") {
    RepEnumOptions full;
    full.nonabelian_only = false;
    full.up_to_conjugacy = false;
    for (const char* name : {"3_1", "4_1"}) {
        WirtingerData k = builtin_knot(name);
        for (i64 p : {2, 3}) {
            auto mine = enumerate_reps(k, p, full);
            std::set<std::vector<Mat2>> got;
            for (const Rep2& r : mine) got.insert(r.images);
            CHECK(got.size() == mine.size()); // no duplicates
            CHECK(got == oracle::brute_force_reps(k.pres, p, false));
        }
    }
}

TEST_CASE("nonabelian trefoil count at p=3 against the braid equation") {
    // oracle: pairs (A,B) with ABA = BAB, nonabelian; the Wirtinger solutions
    // biject with them via (A,B) -> (A,B,ABA^-1)
    i64 p = 3;
    int pairs = 0;
    for (const Mat2& A : sl2_elements(p))
        for (const Mat2& B : sl2_elements(p)) {
            if (m2_mul(m2_mul(A, B, p), A, p) != m2_mul(m2_mul(B, A, p), B, p)) continue;
            if (!m2_commute(A, B, p)) ++pairs;
        }
    RepEnumOptions full;
    full.nonabelian_only = true;
    full.up_to_conjugacy = false;
    auto mine = enumerate_reps(builtin_knot("3_1"), p, full);
    CHECK(static_cast<int>(mine.size()) == pairs);
    CHECK(pairs > 0);
}

TEST_CASE("emitted set is closed under conjugation when not reducing") {
    WirtingerData k = builtin_knot("3_1");
    RepEnumOptions full;
    full.nonabelian_only = true;
    full.up_to_conjugacy = false;
    auto mine = enumerate_reps(k, 3, full);
    std::set<std::vector<Mat2>> got;
    for (const Rep2& r : mine) got.insert(r.images);
    // spot-check: conjugating an emitted rep yields an emitted rep
    int checked = 0;
    for (const Rep2& r : mine) {
        if (++checked > 5) break;
        for (const Mat2& g : sl2_elements(3)) {
            std::vector<Mat2> conj;
            for (const Mat2& m : r.images) conj.push_back(m2_conj(g, m, 3));
            CHECK(got.count(conj) == 1);
        }
    }
}

TEST_CASE("deterministic order and text form") {
    WirtingerData k = builtin_knot("3_1");
    auto a = enumerate_reps(k, 5, {});
    auto b = enumerate_reps(k, 5, {});
    CHECK(a == b);
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].images < a[i].images);

    std::string text = rep_to_string(a.front(), k.gen_names);
    Rep2 back = parse_rep(text, k.gen_names);
    CHECK(back == a.front());
}

TEST_CASE("abelian representations appear without the nonabelian filter") {
    WirtingerData k = builtin_knot("3_1");
    RepEnumOptions all;
    all.nonabelian_only = false;
    all.up_to_conjugacy = true;
    auto reps = enumerate_reps(k, 5, all);
    bool has_trivial = false, has_abelian_nontrivial = false;
    for (const Rep2& r : reps) {
        bool triv = true;
        for (const Mat2& m : r.images) triv = triv && m.is_identity();
        if (triv) has_trivial = true;
        if (!triv && !is_nonabelian(r)) has_abelian_nontrivial = true;
    }
    CHECK(has_trivial);
    CHECK(has_abelian_nontrivial);
}
