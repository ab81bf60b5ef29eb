// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "core/forms.hpp"

#include <numeric>

#include "core/error.hpp"
#include "core/pairs.hpp"
#include "core/primality.hpp"

namespace hasse {

std::vector<std::tuple<u64, i64, u64>> reduced_forms(i64 disc) {
    if (disc >= 0) fail(Err::BadDiscriminant, "discriminant must be negative");
    i64 m4 = ((disc % 4) + 4) % 4;
    if (m4 != 0 && m4 != 1) fail(Err::BadDiscriminant, "disc = 2,3 mod 4");
    if (static_cast<u64>(-disc) > 100000000ull)
        fail(Err::BoundTooLarge, "|disc| above 10^8");
    u64 n = static_cast<u64>(-disc);
    std::vector<std::tuple<u64, i64, u64>> out;
    // b runs over the parity class of disc with 3 b^2 <= |disc|
    for (u64 b = n % 2; 3 * b * b <= n; b += 2) {
        u64 m = (b * b + n) / 4; // = a c
        for (u64 a = std::max<u64>(b, 1); a * a <= m; ++a) {
            if (m % a) continue;
            u64 c = m / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            if (b == 0 || b == a || a == c) {
                out.emplace_back(a, static_cast<i64>(b), c);
            } else {
                out.emplace_back(a, static_cast<i64>(b), c);
                out.emplace_back(a, -static_cast<i64>(b), c);
            }
        }
    }
    return out;
}

u64 class_number(i64 disc) { return reduced_forms(disc).size(); }

u64 kronecker_class_number(i64 delta) {
    auto [f, D] = decompose_discriminant(delta);
    u64 total = 0;
    for (u64 g : divisors(f)) total += class_number(static_cast<i64>(g * g) * D);
    return total;
}

} // namespace hasse
