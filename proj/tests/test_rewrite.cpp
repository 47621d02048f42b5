#include "doctest.h"

#include "oracles.hpp"
#include "tapoly/knot_table.hpp"
#include "tapoly/rewrite.hpp"

#include <random>

using namespace tapoly;

namespace {

// independent confluence check: every critical pair of the finished system
// must be joinable
bool is_confluent(const RewriteSystem& rs) {
    const auto& rules = rs.rules();
    for (const RewriteRule& r1 : rules) {
        for (const RewriteRule& r2 : rules) {
            size_t maxo = std::min(r1.lhs.size(), r2.lhs.size()) - 1;
            for (size_t o = 1; o <= maxo; ++o) {
                if (!std::equal(r2.lhs.begin(), r2.lhs.begin() + o, r1.lhs.end() - o)) continue;
                std::vector<Letter> left = r1.rhs;
                left.insert(left.end(), r2.lhs.begin() + o, r2.lhs.end());
                std::vector<Letter> right(r1.lhs.begin(), r1.lhs.end() - o);
                right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
                if (rs.normal_form(left) != rs.normal_form(right)) return false;
            }
            if (r2.lhs.size() < r1.lhs.size()) {
                for (size_t k = 0; k + r2.lhs.size() <= r1.lhs.size(); ++k) {
                    if (!std::equal(r2.lhs.begin(), r2.lhs.end(), r1.lhs.begin() + k)) continue;
                    std::vector<Letter> right(r1.lhs.begin(), r1.lhs.begin() + k);
                    right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
                    right.insert(right.end(), r1.lhs.begin() + k + r2.lhs.size(), r1.lhs.end());
                    if (rs.normal_form(r1.rhs) != rs.normal_form(right)) return false;
                }
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("free group completes to free reduction only") {
    GroupPresentation fg;
    fg.gen_count = 2;
    RewriteSystem rs = kb_complete(fg);
    CHECK(rs.complete());
    CHECK(rs.rules().size() == 4);
    Word w = Word::from_letters({1, 2, -2, -1, 1});
    CHECK(rs.normal_form(w) == Word::gen(0));
    CHECK(is_confluent(rs));
}

TEST_CASE("Z^2 completes to the commutation system") {
    GroupPresentation z2;
    z2.gen_count = 2;
    z2.relators.push_back(Word::from_letters({1, 2, -1, -2}));
    RewriteSystem rs = kb_complete(z2);
    CHECK(rs.complete());
    CHECK(is_confluent(rs));
    // normal form a^i b^j: check on random words by sorting exponents
    std::mt19937 rng(4);
    for (int t = 0; t < 40; ++t) {
        Word w = oracle::random_word(rng, 2, 12);
        int ea = 0, eb = 0;
        for (Letter l : w.letters()) (letter_gen(l) == 0 ? ea : eb) += letter_sign(l);
        Word nf = rs.normal_form(w);
        CHECK(nf == Word::gen(0).pow(ea) * Word::gen(1).pow(eb));
    }
}

TEST_CASE("rewriting preserves the group element") {
    // every rule application fixes the image under any representation
    WirtingerData k = builtin_knot("4_1");
    RewriteSystem rs = kb_complete(k.pres, KbLimits{200, 40, 0.5});
    auto reps = enumerate_reps(k, 5, {});
    REQUIRE(!reps.empty());
    std::mt19937 rng(9);
    for (int t = 0; t < 60; ++t) {
        Word w = oracle::random_word(rng, 4, 14);
        Word nf = rs.normal_form(w);
        for (const Rep2& r : reps) CHECK(eval_word(r, w) == eval_word(r, nf));
    }
}

TEST_CASE("trefoil word problem is decided") {
    WordProblem wp(builtin_knot("3_1"));
    CHECK(wp.decisive());
    WirtingerData k = builtin_knot("3_1");
    for (const Word& r : k.pres.relators) CHECK(wp.is_trivial(r) == Triviality::trivial);
    CHECK(wp.is_trivial(Word::gen(0)) == Triviality::nontrivial);
    CHECK(wp.is_trivial(Word()) == Triviality::trivial);

    // center (x1 x2 x1)^2 is nontrivial but commutes with everything
    Word c = (Word::gen(0) * Word::gen(1) * Word::gen(0)).pow(2);
    CHECK(wp.is_trivial(c) == Triviality::nontrivial);
    for (int g = 0; g < 3; ++g)
        CHECK(wp.is_trivial(c * Word::gen(g) * c.inverse() * Word::gen(g, -1)) == Triviality::trivial);

    // transported system is genuinely confluent (independent check)
    GroupPresentation torus;
    torus.gen_count = 3;
    torus.relators.push_back(Word::from_letters({1, 1, -3}));
    torus.relators.push_back(Word::from_letters({2, 2, 2, -3}));
    std::vector<int> order = {0, 5, 1, 3, 2, 4};
    RewriteSystem rsH = kb_complete(torus, {}, &order);
    REQUIRE(rsH.complete());
    CHECK(is_confluent(rsH));
}

TEST_CASE("no contradictory verdicts") {
    // fuzz products of relator conjugates (always trivial) and random words
    for (const char* name : {"3_1", "4_1"}) {
        WirtingerData k = builtin_knot(name);
        WordProblem wp(k);
        std::mt19937 rng(name[0]);
        for (int t = 0; t < 30; ++t) {
            Word w;
            int pieces = 1 + t % 3;
            for (int i = 0; i < pieces; ++i) {
                Word conj = oracle::random_word(rng, k.pres.gen_count, 6);
                const Word& rel = k.pres.relators[t % k.pres.relators.size()];
                w = w * conj * rel * conj.inverse();
            }
            CHECK(wp.is_trivial(w) != Triviality::nontrivial); // trivial by construction
        }
        for (int t = 0; t < 30; ++t) {
            Word w = oracle::random_word(rng, k.pres.gen_count, 10);
            // exponent sum nonzero means definitely nontrivial
            if (w.exponent_sum() != 0) CHECK(wp.is_trivial(w) != Triviality::trivial);
        }
    }
}

TEST_CASE("partial systems answer soundly") {
    WirtingerData k = builtin_knot("4_1");
    WordProblem wp(k);
    CHECK_FALSE(wp.decisive()); // no finite shortlex system found for 4_1
    CHECK(wp.is_trivial(k.pres.relators[0]) == Triviality::trivial);
    CHECK(wp.is_trivial(Word::gen(0)) == Triviality::nontrivial); // refuted or reduced
    Word m = k.meridian, l = *k.longitude;
    CHECK(wp.is_trivial(m * l * m.inverse() * l.inverse()) == Triviality::trivial);
}

TEST_CASE("every bundled diagram's longitude commutes with its meridian") {
    for (const auto& [name, d] : parse_pd_file(builtin_pd_table())) {
        WirtingerData k = wirtinger(d, name);
        WordProblem wp(k, KbLimits{2000, 80, 1.0});
        Word m = k.meridian, l = *k.longitude;
        INFO(name);
        CHECK(wp.is_trivial(m * l * m.inverse() * l.inverse()) == Triviality::trivial);
        CHECK(wp.is_trivial(l) != Triviality::trivial); // longitudes of nontrivial knots
    }
}

TEST_CASE("element enumeration yields distinct elements") {
    WordProblem wp(builtin_knot("3_1"));
    REQUIRE(wp.decisive());
    auto els = wp.elements(3);
    for (size_t i = 0; i < els.size(); ++i)
        for (size_t j = i + 1; j < els.size(); ++j) CHECK_FALSE(wp.equal(els[i], els[j]));
    CHECK(els.size() > 10);
}

TEST_CASE("rewriting-only verdicts") {
    GroupPresentation z2;
    z2.gen_count = 2;
    z2.relators.push_back(Word::from_letters({1, 2, -1, -2}));
    RewriteSystem complete = kb_complete(z2);
    REQUIRE(complete.complete());
    CHECK(word_is_trivial(z2.relators[0], complete) == Triviality::trivial);
    CHECK(word_is_trivial(Word::gen(0), complete) == Triviality::nontrivial);

    WirtingerData k = builtin_knot("4_1");
    RewriteSystem partial = kb_complete(k.pres, KbLimits{100, 30, 0.2});
    REQUIRE_FALSE(partial.complete());
    CHECK(word_is_trivial(k.pres.relators[0], partial) == Triviality::trivial);
    CHECK(word_is_trivial(Word::gen(0), partial) == Triviality::unknown);
}

TEST_CASE("weighted order parameters are honored") {
    GroupPresentation fg;
    fg.gen_count = 1;
    std::vector<int> bad_order = {0};
    CHECK_THROWS_AS(kb_complete(fg, {}, &bad_order), error);
    std::vector<int> order = {0, 1};
    std::vector<int> bad_w = {0, 1};
    CHECK_THROWS_AS(kb_complete(fg, {}, &order, &bad_w), error);
    std::vector<int> w = {2, 3};
    CHECK(kb_complete(fg, {}, &order, &w).complete());
}
