#include "tapoly/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace tapoly {

Ring Ring::fp(i64 p) {
    if (!is_prime(p)) throw error("not a prime: " + std::to_string(p));
    return Ring{Kind::prime_field, p};
}

i64 Ring::add(i64 a, i64 b) const {
    return kind == Kind::prime_field ? mod_norm(a + b, p) : checked_add(a, b);
}

i64 Ring::sub(i64 a, i64 b) const {
    return kind == Kind::prime_field ? mod_norm(a - b, p) : checked_add(a, -b);
}

i64 Ring::mul(i64 a, i64 b) const {
    return kind == Kind::prime_field ? mod_mul(mod_norm(a, p), mod_norm(b, p), p) : checked_mul(a, b);
}

i64 Ring::neg(i64 a) const {
    return kind == Kind::prime_field ? mod_norm(-a, p) : -a;
}

i64 Ring::inv(i64 a) const {
    if (kind != Kind::prime_field) throw error("inverse only defined over F_p");
    return mod_inv(a, p);
}

std::string Ring::to_string() const {
    return kind == Kind::integers ? "Z" : "F_" + std::to_string(p);
}

static void require_same_ring(const Ring& a, const Ring& b) {
    if (!(a == b))
        throw error("mixed coefficient rings: " + a.to_string() + " vs " + b.to_string());
}

void LaurentPoly::set(int exp, i64 coeff) {
    coeff = ring_.norm(coeff);
    if (coeff == 0)
        terms_.erase(exp);
    else
        terms_[exp] = coeff;
}

LaurentPoly LaurentPoly::monomial(Ring ring, i64 coeff, int exp) {
    LaurentPoly f(ring);
    f.set(exp, coeff);
    return f;
}

LaurentPoly LaurentPoly::from_coeffs(Ring ring, const std::vector<i64>& coeffs, int low_exp) {
    LaurentPoly f(ring);
    for (size_t i = 0; i < coeffs.size(); ++i) f.set(low_exp + static_cast<int>(i), coeffs[i]);
    return f;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::low_exp() const {
    if (is_zero()) throw error("low_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::high_exp() const {
    if (is_zero()) throw error("high_exp of zero polynomial");
    return terms_.rbegin()->first;
}

i64 LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same_ring(ring_, o.ring_);
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.set(e, ring_.add(r.coeff(e), c));
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    require_same_ring(ring_, o.ring_);
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.set(e, ring_.sub(r.coeff(e), c));
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_ring(ring_, o.ring_);
    LaurentPoly r(ring_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_)
            r.set(e1 + e2, ring_.add(r.coeff(e1 + e2), ring_.mul(c1, c2)));
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ring_);
    for (auto& [e, c] : terms_) r.set(e, ring_.neg(c));
    return r;
}

LaurentPoly LaurentPoly::times_unit(i64 c, int k) const {
    LaurentPoly r(ring_);
    for (auto& [e, cc] : terms_) r.set(e + k, ring_.mul(cc, c));
    return r;
}

LaurentPoly LaurentPoly::canonical() const {
    if (is_zero()) return *this;
    int shift = -low_exp();
    if (ring_.is_field()) return times_unit(ring_.inv(terms_.begin()->second), shift);
    // integers: leading coefficient positive, content preserved
    return times_unit(terms_.rbegin()->second < 0 ? -1 : 1, shift);
}

// ---- division ----------------------------------------------------------

// Attempt the exact quotient f / g in the Laurent ring.  Works on shifted
// ordinary polynomials; over the integers every elimination step must divide
// exactly, which is equivalent to divisibility in Z[t^{+-1}].
static std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw error("division by zero polynomial");
    if (f.is_zero()) return LaurentPoly::zero(f.ring());

    const Ring& R = f.ring();
    int shift = f.low_exp() - g.low_exp();

    // dense coefficient vectors of the shifted numerator and divisor
    std::vector<i64> a(f.high_exp() - f.low_exp() + 1, 0);
    for (auto& [e, c] : f.terms()) a[e - f.low_exp()] = c;
    std::vector<i64> b(g.high_exp() - g.low_exp() + 1, 0);
    for (auto& [e, c] : g.terms()) b[e - g.low_exp()] = c;

    if (a.size() < b.size()) return std::nullopt;
    std::vector<i64> q(a.size() - b.size() + 1, 0);
    i64 blead = b.back();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        i64 head = a[i + b.size() - 1];
        if (head == 0) continue;
        i64 qi;
        if (R.is_field()) {
            qi = R.mul(head, R.inv(blead));
        } else {
            if (head % blead != 0) return std::nullopt;
            qi = head / blead;
        }
        q[i] = qi;
        for (size_t j = 0; j < b.size(); ++j) a[i + j] = R.sub(a[i + j], R.mul(qi, b[j]));
    }
    for (i64 c : a)
        if (c != 0) return std::nullopt;
    return LaurentPoly::from_coeffs(R, q, shift);
}

bool is_divisible(const LaurentPoly& f, const LaurentPoly& g) {
    return try_exact_div(f, g).has_value();
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    auto q = try_exact_div(f, g);
    if (!q) throw error("inexact polynomial division");
    return *q;
}

// ---- gcd ---------------------------------------------------------------

namespace {

// euclidean remainder over F_p on shifted polynomials
LaurentPoly field_mod(const LaurentPoly& f, const LaurentPoly& g) {
    const Ring& R = f.ring();
    LaurentPoly r = f;
    i64 ginv = R.inv(g.terms().rbegin()->second);
    int gdeg = g.high_exp();
    while (!r.is_zero() && r.high_exp() >= gdeg) {
        i64 c = R.mul(r.terms().rbegin()->second, ginv);
        r = r - g.times_unit(c, r.high_exp() - gdeg);
    }
    return r;
}

LaurentPoly gcd_field(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        LaurentPoly r = field_mod(a, b);
        a = b;
        b = r;
    }
    return a.canonical();
}

i64 content_of(const LaurentPoly& f) {
    i64 c = 0;
    for (auto& [e, v] : f.terms()) c = gcd_i64(c, v);
    return c;
}

// pseudo-remainder of shifted integer polynomials (lead(g)^(d+1) * f mod g)
LaurentPoly prem(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly r = f;
    i64 glead = g.terms().rbegin()->second;
    int gdeg = g.high_exp();
    int steps = f.high_exp() - gdeg + 1;
    for (int s = 0; s < steps; ++s) {
        if (r.is_zero()) break;
        if (r.high_exp() < gdeg) {
            r = r.times_unit(glead, 0);
            continue;
        }
        i64 rlead = r.terms().rbegin()->second;
        int d = r.high_exp() - gdeg;
        r = r.times_unit(glead, 0) - g.times_unit(rlead, d);
    }
    return r;
}

// primitive-PRS gcd of integer polynomials, content handled separately
LaurentPoly gcd_integers(LaurentPoly a, LaurentPoly b) {
    i64 content = gcd_i64(content_of(a), content_of(b));
    auto primitive = [](LaurentPoly f) {
        if (f.is_zero()) return f;
        i64 c = content_of(f);
        LaurentPoly r(f.ring());
        for (auto& [e, v] : f.terms()) r = r + LaurentPoly::monomial(f.ring(), v / c, e);
        return r.canonical();
    };
    a = primitive(a.canonical());
    b = primitive(b.canonical());
    if (a.high_exp() < b.high_exp()) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = primitive(prem(a, b));
        a = b;
        b = r;
    }
    return a.times_unit(content, 0).canonical();
}

} // namespace

LaurentPoly lp_gcd(const std::vector<LaurentPoly>& fs) {
    if (fs.empty()) throw error("gcd of an empty list");
    const Ring& R = fs.front().ring();
    LaurentPoly g = LaurentPoly::zero(R);
    bool any = false;
    for (auto& f : fs) {
        require_same_ring(R, f.ring());
        if (f.is_zero()) continue;
        any = true;
        if (g.is_zero())
            g = f.canonical();
        else
            g = R.is_field() ? gcd_field(g, f) : gcd_integers(g, f);
        if (g.is_one()) break;
    }
    if (!any) throw error("gcd of all-zero list");
    return g.canonical();
}

bool lp_less(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() != b.is_zero()) return a.is_zero();
    if (a.is_zero()) return false;
    if (a.high_exp() - a.low_exp() != b.high_exp() - b.low_exp())
        return a.high_exp() - a.low_exp() < b.high_exp() - b.low_exp();
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    for (; ita != a.terms().end() && itb != b.terms().end(); ++ita, ++itb) {
        if (ita->first - a.low_exp() != itb->first - b.low_exp())
            return ita->first - a.low_exp() > itb->first - b.low_exp(); // denser first
        if (ita->second != itb->second) return ita->second < itb->second;
    }
    return a.terms().size() < b.terms().size();
}

// ---- text form ---------------------------------------------------------

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        i64 mag = c < 0 ? -c : c;
        if (mag != 1 || e == 0) {
            out << mag;
            if (e != 0) out << "*";
        }
        if (e != 0) {
            out << var;
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, Ring ring) {
    LaurentPoly f(ring);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_int = [&]() -> i64 {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw error("polynomial parse error at offset " + std::to_string(i) + " in '" + text + "'");
        i64 v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        return neg ? -v : v;
    };

    skip_ws();
    if (i == text.size()) throw error("empty polynomial text");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        i64 sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            throw error("expected '+' or '-' at offset " + std::to_string(i) + " in '" + text + "'");
        }
        i64 c = 1;
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            c = parse_int();
            saw_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int e = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = static_cast<int>(parse_int());
            }
        } else if (!saw_coeff) {
            throw error("expected term at offset " + std::to_string(i) + " in '" + text + "'");
        }
        f.set(e, f.ring_.add(f.coeff(e), f.ring_.norm(sign * c)));
        any = true;
    }
    if (!any) throw error("empty polynomial text");
    return f;
}

} // namespace tapoly
