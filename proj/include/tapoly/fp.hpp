#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tapoly {

using i64 = long long;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic in F_p and overflow-checked integer arithmetic.  All residues
// are kept normalized to [0, p).

i64 mod_norm(i64 a, i64 p);
i64 mod_mul(i64 a, i64 b, i64 p);
i64 mod_pow(i64 a, i64 e, i64 p);
i64 mod_inv(i64 a, i64 p); // throws if a == 0 mod p

bool is_prime(i64 n);

// Integer ops that throw tapoly::error on overflow instead of wrapping.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 gcd_i64(i64 a, i64 b); // nonnegative result

} // namespace tapoly
