#include "tapoly/fox.hpp"

namespace tapoly {

GroupRingElem GroupRingElem::from_word(const Word& w, i64 coeff) {
    GroupRingElem e;
    e.add_term(w, coeff);
    return e;
}

void GroupRingElem::add_term(const Word& w, i64 coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    GroupRingElem r = *this;
    for (auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    GroupRingElem r = *this;
    for (auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    GroupRingElem r;
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) r.add_term(w1 * w2, checked_mul(c1, c2));
    return r;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r;
    for (auto& [w, c] : terms_) r.add_term(w, -c);
    return r;
}

GroupRingElem GroupRingElem::scaled(i64 c) const {
    GroupRingElem r;
    for (auto& [w, cc] : terms_) r.add_term(w, checked_mul(cc, c));
    return r;
}

GroupRingElem GroupRingElem::left_mul(const Word& w) const {
    GroupRingElem r;
    for (auto& [u, c] : terms_) r.add_term(w * u, c);
    return r;
}

GroupRingElem fox_derivative(const Word& w, int gen_index, int ambient_gen_count) {
    if (gen_index < 0 || gen_index >= ambient_gen_count)
        throw error("fox derivative: generator index " + std::to_string(gen_index) + " out of range");
    GroupRingElem result;
    std::vector<Letter> prefix;
    for (Letter l : w.letters()) {
        if (letter_gen(l) == gen_index) {
            if (letter_sign(l) > 0) {
                // d(x)/dx contributes +prefix
                result.add_term(Word::from_letters(prefix), 1);
                prefix.push_back(l);
            } else {
                // d(x^-1)/dx contributes -(prefix x^-1)
                prefix.push_back(l);
                result.add_term(Word::from_letters(prefix), -1);
            }
        } else {
            prefix.push_back(l);
        }
    }
    return result;
}

} // namespace tapoly
