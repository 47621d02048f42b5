#pragma once

#include "tapoly/mat2.hpp"
#include "tapoly/wirtinger.hpp"

#include <string>
#include <vector>

namespace tapoly {

// Representation of a presented group into SL(2,F_p): one determinant-1
// matrix per generator, with every relator mapping to the identity.
struct Rep2 {
    i64 p = 2;
    std::vector<Mat2> images;

    bool operator==(const Rep2&) const = default;
};

Mat2 eval_word(const Rep2& r, const Word& w);

// true iff every relator evaluates to the identity
bool rep_check(const Rep2& r, const GroupPresentation& g);

// true iff some pair of generator images fails to commute
bool is_nonabelian(const Rep2& r);

struct RepEnumOptions {
    bool nonabelian_only = true;
    bool up_to_conjugacy = true;
};

// All SL(2,F_p) representations of a deficiency-one conjugation
// presentation, in lexicographic image order.  With up_to_conjugacy the
// first generator image runs over conjugacy-class representatives only
// (residual duplicates through its centralizer are possible and are
// deduplicated downstream by polynomial pairs).
std::vector<Rep2> enumerate_reps(const WirtingerData& w, i64 p, RepEnumOptions opts = {});

// certificate text form: p=5; x1 = [[a,b],[c,d]]; ...
std::string rep_to_string(const Rep2& r, const std::vector<std::string>& names);
Rep2 parse_rep(const std::string& text, const std::vector<std::string>& names);

} // namespace tapoly
