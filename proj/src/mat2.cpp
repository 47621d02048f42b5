#include "tapoly/mat2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace tapoly {

Mat2 m2_identity() { return Mat2{}; }

Mat2 m2_make(i64 a, i64 b, i64 c, i64 d, i64 p) {
    return Mat2{mod_norm(a, p), mod_norm(b, p), mod_norm(c, p), mod_norm(d, p)};
}

Mat2 m2_mul(const Mat2& x, const Mat2& y, i64 p) {
    return Mat2{mod_norm(x.a * y.a + x.b * y.c, p), mod_norm(x.a * y.b + x.b * y.d, p),
                mod_norm(x.c * y.a + x.d * y.c, p), mod_norm(x.c * y.b + x.d * y.d, p)};
}

Mat2 m2_inv_sl2(const Mat2& x, i64 p) {
    return Mat2{x.d, mod_norm(-x.b, p), mod_norm(-x.c, p), x.a};
}

Mat2 m2_conj(const Mat2& g, const Mat2& x, i64 p) {
    return m2_mul(m2_mul(g, x, p), m2_inv_sl2(g, p), p);
}

i64 m2_det(const Mat2& x, i64 p) { return mod_norm(x.a * x.d - x.b * x.c, p); }

i64 m2_trace(const Mat2& x, i64 p) { return mod_norm(x.a + x.d, p); }

bool m2_commute(const Mat2& x, const Mat2& y, i64 p) {
    return m2_mul(x, y, p) == m2_mul(y, x, p);
}

std::string m2_to_string(const Mat2& x) {
    std::ostringstream out;
    out << "[[" << x.a << "," << x.b << "],[" << x.c << "," << x.d << "]]";
    return out.str();
}

namespace {

constexpr i64 kMaxEnumPrime = 101; // SL2 enumeration is cubic in p

std::mutex cache_mutex;

void check_enumerable(i64 p) {
    if (!is_prime(p)) throw error("not a prime: " + std::to_string(p));
    if (p > kMaxEnumPrime)
        throw error("SL(2,F_p) enumeration supported for p <= " + std::to_string(kMaxEnumPrime) +
                    " (got " + std::to_string(p) + ")");
}

} // namespace

const std::vector<Mat2>& sl2_elements(i64 p) {
    check_enumerable(p);
    static std::map<i64, std::vector<Mat2>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;

    std::vector<Mat2> all;
    all.reserve(static_cast<size_t>(p) * p * p);
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
            for (i64 c = 0; c < p; ++c) {
                // solve a*d - b*c = 1 for d
                if (a != 0) {
                    i64 d = mod_mul(mod_inv(a, p), mod_norm(1 + b * c, p), p);
                    all.push_back(Mat2{a, b, c, d});
                } else {
                    if (mod_norm(-b * c, p) != 1) continue;
                    for (i64 d = 0; d < p; ++d) all.push_back(Mat2{a, b, c, d});
                }
            }
    std::sort(all.begin(), all.end());
    return cache.emplace(p, std::move(all)).first->second;
}

std::vector<Mat2> sl2_conjugacy_class(const Mat2& x, i64 p) {
    std::set<Mat2> cls;
    for (const Mat2& g : sl2_elements(p)) cls.insert(m2_conj(g, x, p));
    return std::vector<Mat2>(cls.begin(), cls.end());
}

const std::vector<Mat2>& sl2_class_reps(i64 p) {
    check_enumerable(p);
    static std::map<i64, std::vector<Mat2>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    std::vector<Mat2> reps;
    std::set<Mat2> seen;
    for (const Mat2& x : sl2_elements(p)) {
        if (seen.count(x)) continue;
        reps.push_back(x);
        for (const Mat2& y : sl2_conjugacy_class(x, p)) seen.insert(y);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(p, std::move(reps)).first->second;
}

} // namespace tapoly
