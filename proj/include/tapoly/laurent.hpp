#pragma once

#include "tapoly/fp.hpp"

#include <map>
#include <string>
#include <vector>

namespace tapoly {

// Coefficient ring of a Laurent polynomial: the integers, or the prime
// field F_p.  Every polynomial carries its ring; mixing rings is an error.
struct Ring {
    enum class Kind { integers, prime_field };

    Kind kind = Kind::integers;
    i64 p = 0;

    static Ring integers() { return Ring{Kind::integers, 0}; }
    static Ring fp(i64 p);

    bool is_field() const { return kind == Kind::prime_field; }
    bool operator==(const Ring&) const = default;

    i64 norm(i64 c) const { return kind == Kind::prime_field ? mod_norm(c, p) : c; }
    i64 add(i64 a, i64 b) const;
    i64 sub(i64 a, i64 b) const;
    i64 mul(i64 a, i64 b) const;
    i64 neg(i64 a) const;
    i64 inv(i64 a) const; // field only

    std::string to_string() const;
};

// Laurent polynomial in one variable t: a finite map exponent -> nonzero
// coefficient.  Exponents may be negative.  Immutable in spirit: all
// operations return new values.
class LaurentPoly {
public:
    explicit LaurentPoly(Ring ring = Ring::integers()) : ring_(ring) {}

    static LaurentPoly zero(Ring ring) { return LaurentPoly(ring); }
    static LaurentPoly one(Ring ring) { return monomial(ring, 1, 0); }
    static LaurentPoly monomial(Ring ring, i64 coeff, int exp);
    static LaurentPoly from_coeffs(Ring ring, const std::vector<i64>& coeffs, int low_exp = 0);

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // lowest/highest exponent with nonzero coefficient; throws on zero
    int low_exp() const;
    int high_exp() const;
    int term_count() const { return static_cast<int>(terms_.size()); }

    i64 coeff(int exp) const;
    const std::map<int, i64>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    // multiply by the unit c * t^k
    LaurentPoly times_unit(i64 c, int k) const;

    // Canonical representative of the unit orbit {c t^k f}: lowest exponent
    // shifted to 0, then the lowest coefficient made 1 over F_p, or the
    // leading coefficient made positive over the integers (content
    // preserved).  Zero maps to zero.
    LaurentPoly canonical() const;

    bool operator==(const LaurentPoly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

    std::string to_string(const std::string& var = "t") const;

    static LaurentPoly parse(const std::string& text, Ring ring);

private:
    void set(int exp, i64 coeff); // normalizes and drops zeros

    Ring ring_;
    std::map<int, i64> terms_;
};

// true iff f = q * g for some Laurent polynomial q over the same ring.
// Over the integers this is divisibility in Z[t^{+-1}].  g must be nonzero.
bool is_divisible(const LaurentPoly& f, const LaurentPoly& g);

// exact quotient f / g; throws if g does not divide f
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

// gcd of a nonempty list, not all zero, returned in canonical form
LaurentPoly lp_gcd(const std::vector<LaurentPoly>& fs);

// total order used to sort polynomial tables deterministically
bool lp_less(const LaurentPoly& a, const LaurentPoly& b);

} // namespace tapoly
