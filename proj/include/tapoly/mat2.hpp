#pragma once

#include "tapoly/fp.hpp"

#include <compare>
#include <string>
#include <vector>

namespace tapoly {

// 2x2 matrix [[a,b],[c,d]] with entries in F_p, normalized to [0,p).
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;

    bool operator==(const Mat2&) const = default;
    auto operator<=>(const Mat2&) const = default;

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
};

Mat2 m2_identity();
Mat2 m2_make(i64 a, i64 b, i64 c, i64 d, i64 p);
Mat2 m2_mul(const Mat2& x, const Mat2& y, i64 p);
Mat2 m2_conj(const Mat2& g, const Mat2& x, i64 p); // g x g^-1, g in SL2
Mat2 m2_inv_sl2(const Mat2& x, i64 p);             // inverse assuming det 1
i64 m2_det(const Mat2& x, i64 p);
i64 m2_trace(const Mat2& x, i64 p);
bool m2_commute(const Mat2& x, const Mat2& y, i64 p);

std::string m2_to_string(const Mat2& x);

// all of SL(2,F_p), lexicographically sorted; cached per p
const std::vector<Mat2>& sl2_elements(i64 p);

// conjugacy class of x in SL(2,F_p), sorted
std::vector<Mat2> sl2_conjugacy_class(const Mat2& x, i64 p);

// one representative per conjugacy class, deterministic order
const std::vector<Mat2>& sl2_class_reps(i64 p);

} // namespace tapoly
