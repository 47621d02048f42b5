#include "tapoly/twisted.hpp"

#include <algorithm>
#include <sstream>

namespace tapoly {

bool pair_equal(const TAPair& a, const TAPair& b) {
    return a.p == b.p && a.num.canonical() == b.num.canonical() && a.den == b.den;
}

bool pair_less(const TAPair& a, const TAPair& b) {
    if (a.den == b.den) return lp_less(a.num.canonical(), b.num.canonical());
    return lp_less(a.den, b.den);
}

std::string pair_to_string(const TAPair& t) {
    std::ostringstream out;
    out << "N = " << t.num.to_string() << " ; D = " << t.den.to_string() << " ; p = " << t.p;
    if (!t.rep_id.empty()) out << " ; rep = " << t.rep_id;
    return out.str();
}

PolyMatrix phi(const GroupRingElem& e, const Rep2& r) {
    Ring R = Ring::fp(r.p);
    PolyMatrix m(2, 2, R);
    for (const auto& [w, c] : e.terms()) {
        Mat2 x = eval_word(r, w);
        int exp = w.exponent_sum();
        m.at(0, 0) = m.at(0, 0) + LaurentPoly::monomial(R, c * x.a, exp);
        m.at(0, 1) = m.at(0, 1) + LaurentPoly::monomial(R, c * x.b, exp);
        m.at(1, 0) = m.at(1, 0) + LaurentPoly::monomial(R, c * x.c, exp);
        m.at(1, 1) = m.at(1, 1) + LaurentPoly::monomial(R, c * x.d, exp);
    }
    return m;
}

PolyMatrix alexander_matrix(const GroupPresentation& g, const Rep2& r) {
    if (static_cast<int>(r.images.size()) != g.gen_count)
        throw error("representation does not match presentation");
    Ring R = Ring::fp(r.p);
    const int v = static_cast<int>(g.relators.size());
    PolyMatrix m(2 * v, 2 * g.gen_count, R);
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < g.gen_count; ++j) {
            PolyMatrix block = phi(fox_derivative(g.relators[i], j, g.gen_count), r);
            for (int bi = 0; bi < 2; ++bi)
                for (int bj = 0; bj < 2; ++bj) m.at(2 * i + bi, 2 * j + bj) = block.at(bi, bj);
        }
    }
    return m;
}

namespace {

// det Phi(x_j - 1) = det(t rho(x_j) - E) = t^2 - tr(rho(x_j)) t + 1
LaurentPoly denominator_poly(const Rep2& r, int gen) {
    GroupRingElem xm1 = GroupRingElem::from_word(Word::gen(gen), 1) - GroupRingElem::one();
    return phi(xm1, r).det();
}

} // namespace

TAPair twisted_pair(const WirtingerData& w, const Rep2& r, int removed_col) {
    const GroupPresentation& g = w.pres;
    if (static_cast<int>(g.relators.size()) != g.gen_count - 1)
        throw error("twisted_pair requires a deficiency-one presentation");
    if (removed_col < 0 || removed_col >= g.gen_count) throw error("removed column out of range");

    PolyMatrix m = alexander_matrix(g, r).with_columns_removed(2 * removed_col, 2);
    TAPair t;
    t.p = r.p;
    t.knot = w.name;
    t.num = m.det().canonical();
    t.den = denominator_poly(r, removed_col);
    return t;
}

TAPair twisted_general(const GroupPresentation& g, const Rep2& r, int removed_col) {
    if (removed_col < 0 || removed_col >= g.gen_count) throw error("removed column out of range");
    LaurentPoly den = denominator_poly(r, removed_col);
    if (den.is_zero())
        throw error("det Phi(x_j - 1) = 0 for column " + std::to_string(removed_col) +
                    "; choose another column");

    PolyMatrix m = alexander_matrix(g, r).with_columns_removed(2 * removed_col, 2);
    const int need = m.cols(); // n(u-1)
    const int have = m.rows(); // nv
    TAPair t;
    t.p = r.p;
    t.den = den;
    if (have < need) {
        t.num = LaurentPoly::zero(Ring::fp(r.p));
        return t;
    }

    // gcd over all maximal minors
    std::vector<LaurentPoly> dets;
    std::vector<int> pick(need);
    for (int i = 0; i < need; ++i) pick[i] = i;
    while (true) {
        dets.push_back(m.with_rows(pick).det());
        int i = need - 1;
        while (i >= 0 && pick[i] == have - need + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int k = i + 1; k < need; ++k) pick[k] = pick[k - 1] + 1;
    }
    bool all_zero = std::all_of(dets.begin(), dets.end(), [](const LaurentPoly& f) { return f.is_zero(); });
    t.num = all_zero ? LaurentPoly::zero(Ring::fp(r.p)) : lp_gcd(dets);
    return t;
}

LaurentPoly classical_alexander(const GroupPresentation& g, int removed_col) {
    if (static_cast<int>(g.relators.size()) != g.gen_count - 1)
        throw error("classical_alexander requires a deficiency-one presentation");
    Ring R = Ring::integers();
    const int v = static_cast<int>(g.relators.size());
    PolyMatrix m(v, g.gen_count, R);
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < g.gen_count; ++j) {
            LaurentPoly entry(R);
            GroupRingElem dij = fox_derivative(g.relators[i], j, g.gen_count);
            for (const auto& [word, c] : dij.terms())
                entry = entry + LaurentPoly::monomial(R, c, word.exponent_sum());
            m.at(i, j) = entry;
        }
    }
    return m.with_columns_removed(removed_col, 1).det().canonical();
}

LaurentPoly classical_alexander(const WirtingerData& w) {
    return classical_alexander(w.pres, 0);
}

std::vector<TAPair> twisted_pair_table(const WirtingerData& w, i64 p, RepEnumOptions opts) {
    std::vector<Rep2> reps = enumerate_reps(w, p, opts);
    std::vector<TAPair> pairs;
    for (size_t i = 0; i < reps.size(); ++i) {
        TAPair t = twisted_pair(w, reps[i]);
        t.rep_id = "r" + std::to_string(i);
        bool dup = false;
        for (const TAPair& seen : pairs)
            if (pair_equal(seen, t)) {
                dup = true;
                break;
            }
        if (!dup) pairs.push_back(std::move(t));
    }
    std::sort(pairs.begin(), pairs.end(), pair_less);
    return pairs;
}

} // namespace tapoly
