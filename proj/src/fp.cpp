#include "tapoly/fp.hpp"

namespace tapoly {

i64 mod_norm(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

i64 mod_mul(i64 a, i64 b, i64 p) {
    return static_cast<i64>(static_cast<__int128>(a) * b % p);
}

i64 mod_pow(i64 a, i64 e, i64 p) {
    a = mod_norm(a, p);
    i64 r = 1 % p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

i64 mod_inv(i64 a, i64 p) {
    a = mod_norm(a, p);
    if (a == 0) throw error("division by zero in F_" + std::to_string(p));
    // extended euclid
    i64 r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw error(std::to_string(a) + " is not invertible mod " + std::to_string(p));
    return mod_norm(s0, p);
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (i64 d = 17; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw error("integer overflow in polynomial arithmetic");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw error("integer overflow in polynomial arithmetic");
    return r;
}

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace tapoly
