#pragma once

#include "tapoly/word.hpp"

#include <map>

namespace tapoly {

// Element of the integral group ring Z[F_u]: finite map from reduced words
// to integer coefficients.
class GroupRingElem {
public:
    GroupRingElem() = default;

    static GroupRingElem zero() { return {}; }
    static GroupRingElem one() { return from_word(Word(), 1); }
    static GroupRingElem from_word(const Word& w, i64 coeff = 1);

    const std::map<Word, i64>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator*(const GroupRingElem& o) const;
    GroupRingElem operator-() const;
    GroupRingElem scaled(i64 c) const;

    // left multiplication by a group element
    GroupRingElem left_mul(const Word& w) const;

    bool operator==(const GroupRingElem&) const = default;

    void add_term(const Word& w, i64 coeff);

private:
    std::map<Word, i64> terms_;
};

// Fox free differential d/dx_j: satisfies dx_i/dx_j = delta_ij,
// d(x_j^-1)/dx_j = -x_j^-1 and the product rule
// d(uv)/dx_j = du/dx_j + u dv/dx_j.
GroupRingElem fox_derivative(const Word& w, int gen_index, int ambient_gen_count);

} // namespace tapoly
