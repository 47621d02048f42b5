#include "tapoly/reps.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tapoly {

Mat2 eval_word(const Rep2& r, const Word& w) {
    Mat2 m = m2_identity();
    for (Letter l : w.letters()) {
        int g = letter_gen(l);
        if (g >= static_cast<int>(r.images.size())) throw error("eval_word: generator out of range");
        const Mat2& x = r.images[g];
        m = m2_mul(m, letter_sign(l) > 0 ? x : m2_inv_sl2(x, r.p), r.p);
    }
    return m;
}

bool rep_check(const Rep2& r, const GroupPresentation& g) {
    if (static_cast<int>(r.images.size()) != g.gen_count) return false;
    for (const Mat2& m : r.images)
        if (m2_det(m, r.p) != 1) return false;
    for (const Word& rel : g.relators)
        if (!eval_word(r, rel).is_identity()) return false;
    return true;
}

bool is_nonabelian(const Rep2& r) {
    for (size_t i = 0; i < r.images.size(); ++i)
        for (size_t j = i + 1; j < r.images.size(); ++j)
            if (!m2_commute(r.images[i], r.images[j], r.p)) return true;
    return false;
}

namespace {

// relator W y W^-1 z^-1 seen as the constraint  z = W y W^-1
struct Conjugation {
    Word conjugator; // W
    int from = -1;   // y
    int to = -1;     // z
};

Conjugation split_conjugation(const Word& r) {
    const auto& ls = r.letters();
    size_t n = ls.size();
    size_t m = n / 2 - 1;
    Conjugation c;
    c.conjugator = Word::from_letters(std::vector<Letter>(ls.begin(), ls.begin() + m));
    c.from = letter_gen(ls[m]);
    c.to = letter_gen(ls[n - 1]);
    return c;
}

struct SearchState {
    i64 p;
    const GroupPresentation* pres;
    std::vector<Conjugation> constraints;
    const std::vector<Mat2>* free_pool; // conjugacy class of the first image
    RepEnumOptions opts;
    std::vector<Rep2> out;
};

bool word_known(const Word& w, const std::vector<int>& assigned) {
    for (Letter l : w.letters())
        if (!assigned[letter_gen(l)]) return false;
    return true;
}

// propagate forced images; returns false once a fully determined constraint
// is violated, pruning the branch early
bool propagate(SearchState& st, std::vector<Mat2>& images, std::vector<int>& assigned) {
    bool progress = true;
    Rep2 view{st.p, {}};
    while (progress) {
        progress = false;
        for (const Conjugation& c : st.constraints) {
            if (!word_known(c.conjugator, assigned)) continue;
            bool know_from = assigned[c.from], know_to = assigned[c.to];
            if (!know_from && !know_to) continue;
            view.images = images;
            Mat2 W = eval_word(view, c.conjugator);
            if (know_from && know_to) {
                if (m2_conj(W, images[c.from], st.p) != images[c.to]) return false;
            } else if (know_from) {
                images[c.to] = m2_conj(W, images[c.from], st.p);
                assigned[c.to] = 1;
                progress = true;
            } else {
                images[c.from] = m2_conj(m2_inv_sl2(W, st.p), images[c.to], st.p);
                assigned[c.from] = 1;
                progress = true;
            }
        }
    }
    return true;
}

void search(SearchState& st, std::vector<Mat2> images, std::vector<int> assigned) {
    if (!propagate(st, images, assigned)) return;
    int next = -1;
    for (int g = 0; g < st.pres->gen_count; ++g)
        if (!assigned[g]) {
            next = g;
            break;
        }
    if (next < 0) {
        Rep2 r{st.p, images};
        if (!rep_check(r, *st.pres)) return;
        if (st.opts.nonabelian_only && !is_nonabelian(r)) return;
        st.out.push_back(std::move(r));
        return;
    }
    for (const Mat2& choice : *st.free_pool) {
        auto imgs = images;
        auto asg = assigned;
        imgs[next] = choice;
        asg[next] = 1;
        search(st, std::move(imgs), std::move(asg));
    }
}

} // namespace

std::vector<Rep2> enumerate_reps(const WirtingerData& w, i64 p, RepEnumOptions opts) {
    validate(w);
    const GroupPresentation& g = w.pres;
    if (g.gen_count == 0) return {};

    SearchState st;
    st.p = p;
    st.pres = &g;
    st.opts = opts;
    for (const Word& r : g.relators) st.constraints.push_back(split_conjugation(r));

    // In a validated presentation all generators are conjugate, so every
    // image lies in the conjugacy class of the first one.
    const std::vector<Mat2>& firsts = opts.up_to_conjugacy ? sl2_class_reps(p) : sl2_elements(p);
    for (const Mat2& x1 : firsts) {
        std::vector<Mat2> pool = sl2_conjugacy_class(x1, p);
        st.free_pool = &pool;
        std::vector<Mat2> images(g.gen_count);
        std::vector<int> assigned(g.gen_count, 0);
        images[0] = x1;
        assigned[0] = 1;
        search(st, std::move(images), std::move(assigned));
    }

    std::sort(st.out.begin(), st.out.end(), [](const Rep2& a, const Rep2& b) { return a.images < b.images; });
    return st.out;
}

std::string rep_to_string(const Rep2& r, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "p=" << r.p;
    for (size_t i = 0; i < r.images.size(); ++i)
        out << "; " << (i < names.size() ? names[i] : "g" + std::to_string(i + 1)) << " = "
            << m2_to_string(r.images[i]);
    return out.str();
}

Rep2 parse_rep(const std::string& text, const std::vector<std::string>& names) {
    Rep2 r;
    r.images.assign(names.size(), m2_identity());
    std::vector<bool> seen(names.size(), false);
    std::istringstream in(text);
    std::string field;
    bool have_p = false;
    while (std::getline(in, field, ';')) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw error("rep parse: missing '=' in '" + field + "'");
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r\n");
            size_t e = s.find_last_not_of(" \t\r\n");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(field.substr(0, eq));
        std::string val = trim(field.substr(eq + 1));
        if (key == "p") {
            r.p = std::stoll(val);
            if (!is_prime(r.p)) throw error("rep parse: p is not prime");
            have_p = true;
            continue;
        }
        int gen = -1;
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == key) gen = static_cast<int>(i);
        if (gen < 0) throw error("rep parse: unknown generator '" + key + "'");
        i64 v[4];
        size_t pos = 0;
        int k = 0;
        while (pos < val.size() && k < 4) {
            if (std::isdigit(static_cast<unsigned char>(val[pos])) || val[pos] == '-') {
                size_t end = pos + 1;
                while (end < val.size() && std::isdigit(static_cast<unsigned char>(val[end]))) ++end;
                v[k++] = std::stoll(val.substr(pos, end - pos));
                pos = end;
            } else {
                ++pos;
            }
        }
        if (k != 4) throw error("rep parse: expected 4 matrix entries for '" + key + "'");
        if (!have_p) throw error("rep parse: 'p=' must come first");
        r.images[gen] = m2_make(v[0], v[1], v[2], v[3], r.p);
        seen[gen] = true;
    }
    for (size_t i = 0; i < names.size(); ++i)
        if (!seen[i]) throw error("rep parse: missing image for generator '" + names[i] + "'");
    return r;
}

} // namespace tapoly
