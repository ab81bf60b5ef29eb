// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "core/density.hpp"
#include "core/forms.hpp"
#include "core/pairs.hpp"
#include "core/primality.hpp"

using namespace hasse;

TEST_CASE("class numbers") {
    CHECK(class_number(-3) == 1);
    CHECK(class_number(-4) == 1);
    CHECK(class_number(-7) == 1);
    CHECK(class_number(-67) == 1);
    CHECK(class_number(-75) == 2);
    CHECK(class_number(-147) == 2);
    CHECK(class_number(-603) == 4);
    CHECK(class_number(-979) == 8);
    CHECK(class_number(-1875) == 10);
    auto forms75 = reduced_forms(-75);
    REQUIRE(forms75.size() == 2);
    CHECK(forms75[0] == std::tuple<u64, i64, u64>{1, 1, 19});
    CHECK(forms75[1] == std::tuple<u64, i64, u64>{3, 3, 7});
    CHECK_THROWS_AS(class_number(-5), Error); // 2,3 mod 4 rejected
    CHECK_THROWS_AS(class_number(4), Error);
}

TEST_CASE("kronecker_class_number") {
    CHECK(kronecker_class_number(-3) == 1);
    CHECK(kronecker_class_number(-979) == 8);
    CHECK(kronecker_class_number(-1875) == 13); // 1 + 2 + 10
    CHECK(kronecker_class_number(-603) == 5);   // 1 + 4, the 5 vertices
    CHECK(kronecker_class_number(-75) == 3);
    CHECK(kronecker_class_number(-12) == 2);    // h(-3) + h(-12)
}

namespace {

// second, independent reduced-forms path: a-outer loop
u64 class_number_a_outer(i64 disc) {
    u64 n = static_cast<u64>(-disc);
    u64 count = 0;
    for (u64 a = 1; 4 * a * a <= n + a * a; ++a) { // a <= sqrt(n/3)
        if (3 * a * a > n) break;
        for (i64 b = -static_cast<i64>(a) + 1; b <= static_cast<i64>(a); ++b) {
            i64 num = static_cast<i64>(b) * b + static_cast<i64>(n);
            if (num % static_cast<i64>(4 * a)) continue;
            u64 c = static_cast<u64>(num / static_cast<i64>(4 * a));
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (std::gcd(std::gcd(a, static_cast<u64>(b < 0 ? -b : b)), c) != 1)
                continue;
            ++count;
        }
    }
    return count;
}

} // namespace

TEST_CASE("forms paths agree to 5000") {
    for (i64 d = -3; d >= -5000; --d) {
        i64 m = ((d % 4) + 4) % 4;
        if (m != 0 && m != 1) continue;
        CHECK(class_number(d) == class_number_a_outer(d));
    }
}

TEST_CASE("sieve") {
    SieveTable t = sieve(10);
    CHECK(t.primes == std::vector<u64>{2, 3, 5, 7});
    CHECK(t.prime_powers == std::vector<u64>{2, 3, 4, 5, 7, 8, 9});
    SieveTable t100 = sieve(100);
    CHECK(t100.primes.size() == 25);
    SieveTable big = sieve(1000000);
    CHECK(big.primes.size() == 78498);
    // spot-agreement with the deterministic Miller-Rabin
    for (u64 n : {2ull, 97ull, 561ull, 7919ull, 999983ull, 999984ull})
        CHECK(big.is_prime[n] == is_prime_u64(n));
    CHECK_THROWS_AS(sieve(1), Error);
}

TEST_CASE("andrica scans") {
    SieveTable t = sieve(1000000);
    auto primes = andrica_scan(t, ScanDomain::Primes);
    CHECK(primes.violations.empty());
    CHECK(primes.equalities.empty());
    auto powers = andrica_scan(t, ScanDomain::PrimePowers);
    CHECK(powers.violations.empty());
    CHECK(powers.equalities.empty());
    CHECK(powers.checked > primes.checked);

    // tiny-range sanity: gaps among {2,3,4,5,7,8,9} all below 1 in sqrt scale
    SieveTable small = sieve(10);
    auto rep = andrica_scan(small, ScanDomain::PrimePowers);
    CHECK(rep.violations.empty());
    CHECK(rep.equalities.empty());
}

TEST_CASE("sqrt-gap-one boundary pairs") {
    SieveTable t = sieve(20000);
    auto pairs = sqrt_gap_one_pairs(t);
    // squares of consecutive integers that are both prime powers
    std::vector<std::pair<u64, u64>> expect{{4, 9},    {9, 16},    {16, 25},
                                            {49, 64},  {64, 81},   {256, 289},
                                            {961, 1024}, {16129, 16384}};
    CHECK(pairs == expect);
    // each is a genuine boundary Hasse pair
    for (auto [lo, hi] : pairs) {
        PrimePower a = require_prime_power(lo), b = require_prime_power(hi);
        CHECK(is_hasse(a, b));
        i64 t2 = static_cast<i64>(hi) + 1 - static_cast<i64>(lo);
        CHECK(t2 * t2 == 4 * static_cast<i64>(hi));
    }
}

TEST_CASE("hasse partner counts") {
    SieveTable t = sieve(20000);
    CHECK(hasse_partner_count(101, t) == 7); // 83 89 97 103 107 109 113
    CHECK(hasse_partner_count(2, t) == 2);   // 3, 5
    CHECK(hasse_partner_count(3, t) == 3);   // 2, 5, 7
    CHECK_THROWS_AS(hasse_partner_count(19999, t), Error);

    // cross-module consistency against the pair enumerator; the sweep bound
    // covers the full Hasse window of every p <= 1000
    SieveTable t2 = sieve(1100);
    std::map<u64, u64> via_pairs;
    enumerate_hasse_pairs(1100, false,
                          [&](const PrimePower& a, const PrimePower& b) {
                              if (a.a == 1 && b.a == 1) {
                                  via_pairs[a.q]++;
                                  via_pairs[b.q]++;
                              }
                          });
    for (u64 p : t2.primes) {
        if (p > 1000) break;
        CHECK(hasse_partner_count(p, t2) == via_pairs[p]);
    }
}

TEST_CASE("threshold report is empty at desk scale") {
    SieveTable t = sieve(10300);
    CHECK(threshold_report(t, 10000).empty());
    CHECK(threshold_report(t, 100).empty());
    CHECK(threshold_report(t, 10).empty());
    CHECK_THROWS_AS(threshold_report(t, 10250), Error);
}

TEST_CASE("every prime power below 10^6 has a partner") {
    // desk-scale run of the membership conjecture; odd prime powers are also
    // checked for an odd partner (the window must fit under the bound)
    SieveTable t = sieve(1002100);
    auto is_pp = [&](u64 n) {
        return std::binary_search(t.prime_powers.begin(), t.prime_powers.end(), n);
    };
    for (u64 q : t.prime_powers) {
        if (q > 1000000) break;
        u64 r = isqrt(q);
        u64 lo = q > 2 * r + 1 ? q - 2 * r - 1 : 2;
        u64 hi = q + 2 * r + 3;
        bool any = false, odd = false;
        for (u64 l = lo; l <= hi && !(any && odd); ++l) {
            if (l == q || !is_pp(l)) continue;
            i128 tt = i128(l) + 1 - i128(q);
            if (tt * tt <= i128(4) * l) {
                any = true;
                if (l % 2) odd = true;
            }
        }
        CHECK(any);
        if (q % 2) CHECK(odd);
    }
}
