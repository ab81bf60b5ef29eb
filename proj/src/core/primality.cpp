// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "core/primality.hpp"

#include <algorithm>

namespace hasse {

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 x) { return addmod(mulmod(x, x, n), c, n); };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[n]++;
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::map<u64, unsigned> factorize(u64 n) {
    std::map<u64, unsigned> out;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, out);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> divs{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = divs.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t k = 0; k < sz; ++k) divs.push_back(divs[k] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
    if (hi < 2 || hi < lo) return;
    if (lo < 2) lo = 2;
    u64 root = isqrt(hi);
    std::vector<u64> base;
    {
        std::vector<bool> comp(root + 1, false);
        for (u64 i = 2; i <= root; ++i) {
            if (comp[i]) continue;
            base.push_back(i);
            for (u64 j = i * i; j <= root; j += i) comp[j] = true;
        }
    }
    const u64 seg = 1 << 20;
    std::vector<bool> comp;
    for (u64 start = lo; start <= hi; start += seg) {
        u64 end = std::min(hi, start + seg - 1);
        comp.assign(end - start + 1, false);
        for (u64 p : base) {
            if (p * p > end) break;
            u64 first = std::max(p * p, (start + p - 1) / p * p);
            for (u64 j = first; j <= end; j += p) comp[j - start] = true;
        }
        for (u64 v = start; v <= end; ++v) {
            if (v >= 2 && !comp[v - start]) fn(v);
        }
    }
}

} // namespace hasse
