// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_INTUTIL_HPP
#define HASSEPAIRS_CORE_INTUTIL_HPP

#include <cmath>
#include <cstdint>
#include <numeric>

namespace hasse {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(u128(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// floor(sqrt(n)), exact in integers
inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(u64 n, u64* root = nullptr) {
    u64 r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

// floor(n^(1/k)) by Newton-ish search, exact
inline u64 iroot(u64 n, unsigned k) {
    if (k == 1 || n < 2) return n;
    u64 r = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
    auto pw = [&](u64 x) -> u128 {
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= x;
            if (acc > u128(1) << 100) return acc;
        }
        return acc;
    };
    while (r > 1 && pw(r) > n) --r;
    while (pw(r + 1) <= n) ++r;
    return r;
}

} // namespace hasse

#endif
