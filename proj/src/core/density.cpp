// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "core/density.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace hasse {

SieveTable sieve(u64 x) {
    if (x < 2) fail(Err::InvalidArgument, "sieve bound must be >= 2");
    if (x > 100000000ull) fail(Err::BoundTooLarge, "sieve bound above 10^8");
    SieveTable t;
    t.bound = x;
    t.is_prime.assign(x + 1, true);
    t.is_prime[0] = t.is_prime[1] = false;
    for (u64 i = 2; i * i <= x; ++i) {
        if (!t.is_prime[i]) continue;
        for (u64 j = i * i; j <= x; j += i) t.is_prime[j] = false;
    }
    for (u64 i = 2; i <= x; ++i)
        if (t.is_prime[i]) t.primes.push_back(i);
    t.prime_powers = t.primes;
    for (u64 p : t.primes) {
        if (p > x / p) break;
        for (u128 v = u128(p) * p; v <= x; v *= p)
            t.prime_powers.push_back(static_cast<u64>(v));
    }
    std::sort(t.prime_powers.begin(), t.prime_powers.end());
    return t;
}

AndricaReport andrica_scan(const SieveTable& table, ScanDomain over) {
    const std::vector<u64>& seq =
        over == ScanDomain::Primes ? table.primes : table.prime_powers;
    AndricaReport rep;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        u64 q = seq[i], qq = seq[i + 1];
        // sqrt(q') - sqrt(q) < 1  <=>  (q' - q - 1)^2 < 4q   (q' >= q + 1)
        u64 d = qq - q - 1;
        u128 lhs = u128(d) * d, rhs = u128(4) * q;
        if (lhs > rhs)
            rep.violations.emplace_back(q, qq);
        else if (lhs == rhs)
            rep.equalities.emplace_back(q, qq);
        ++rep.checked;
    }
    return rep;
}

std::vector<std::pair<u64, u64>> sqrt_gap_one_pairs(const SieveTable& table) {
    std::vector<std::pair<u64, u64>> out;
    // sqrt(q1) - sqrt(q2) = 1 forces both q's to be perfect squares of
    // consecutive integers, each a prime power
    auto is_pp = [&](u64 n) {
        return std::binary_search(table.prime_powers.begin(),
                                  table.prime_powers.end(), n);
    };
    for (u64 n = 2; (n + 1) * (n + 1) <= table.bound; ++n) {
        u64 lo = n * n, hi = (n + 1) * (n + 1);
        if (is_pp(lo) && is_pp(hi)) out.emplace_back(lo, hi);
    }
    return out;
}

u64 hasse_partner_count(u64 p, const SieveTable& table) {
    u64 r = isqrt(p);
    u64 hi = p + 2 * r + 3;
    if (hi > table.bound) fail(Err::TableTooSmall, "sieve does not cover the window");
    u64 lo = p > 2 * r + 1 ? p - 2 * r - 1 : 2;
    u64 count = 0;
    for (u64 l = lo; l <= hi; ++l) {
        if (l == p || !table.is_prime[l]) continue;
        i128 t = i128(l) + 1 - i128(p); // trace over F_l
        if (t * t <= i128(4) * l) ++count;
    }
    return count;
}

std::vector<ThresholdException> threshold_report(const SieveTable& table, u64 x) {
    u64 r = isqrt(x);
    if (x + 2 * r + 3 > table.bound)
        fail(Err::TableTooSmall, "sieve does not cover x plus its Hasse window");
    std::vector<ThresholdException> out;
    for (u64 p : table.primes) {
        if (p > x) break;
        u64 count = hasse_partner_count(p, table);
        double thr = 0.5 * std::sqrt(static_cast<double>(p)) /
                     std::log(static_cast<double>(p));
        if (static_cast<double>(count) < thr)
            out.push_back({p, count, thr});
    }
    return out;
}

} // namespace hasse
