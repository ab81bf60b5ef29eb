// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "core/pairs.hpp"

#include <algorithm>
#include <deque>

#include "core/primality.hpp"

namespace hasse {

std::optional<PrimePower> factor_prime_power(u64 n) {
    if (n < 2) return std::nullopt;
    for (unsigned a = 64; a >= 1; --a) {
        u64 r = iroot(n, a);
        if (r < 2) continue;
        u128 back = 1;
        for (unsigned i = 0; i < a; ++i) back *= r;
        if (back == n && is_prime_u64(r)) return PrimePower{n, r, a};
        if (a == 1) break;
    }
    return std::nullopt;
}

PrimePower require_prime_power(u64 n) {
    auto pp = factor_prime_power(n);
    if (!pp) fail(Err::InvalidArgument, std::to_string(n) + " is not a prime power");
    return *pp;
}

bool is_hasse(const PrimePower& q1, const PrimePower& q2) {
    if (q1.q == q2.q) fail(Err::EqualInputs, "pair members must differ");
    i128 t2 = i128(q2.q) + 1 - i128(q1.q);
    return t2 * t2 <= i128(4) * q2.q;
}

PairInvariants pair_invariants(const PrimePower& q1, const PrimePower& q2) {
    if (!is_hasse(q1, q2)) fail(Err::NotHasse, "not a Hasse pair");
    i64 t1 = static_cast<i64>(i128(q1.q) + 1 - i128(q2.q));
    i64 t2 = 2 - t1;
    i64 delta = static_cast<i64>(i128(t1) * t1 - i128(4) * q1.q);
    return {t1, t2, delta};
}

std::pair<u64, i64> decompose_discriminant(i64 delta) {
    if (delta >= 0) fail(Err::NonNegative, "discriminant must be negative");
    u64 n = static_cast<u64>(-delta);
    u64 s = 1, m = 1;
    for (auto [p, e] : factorize(n)) {
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) m *= p;
    }
    // -delta = s^2 m with m squarefree
    if (m % 4 == 3) return {s, -static_cast<i64>(m)};
    // here -m = 1,2 mod 4, so D = -4m and s must be even (delta = 0,1 mod 4)
    return {s / 2, -static_cast<i64>(4 * m)};
}

WCase waterhouse_case(const PrimePower& q, i64 t) {
    if (i128(t) * t > i128(4) * q.q)
        fail(Err::HasseBoundViolated, "trace outside Hasse bound");
    u64 abst = static_cast<u64>(t < 0 ? -t : t);
    if (abst % q.p != 0) return WCase::A;
    u128 t2 = u128(abst) * abst;
    if (t2 == u128(4) * q.q && q.a % 2 == 0) return WCase::B;
    if (t2 == q.q && q.a % 2 == 0 && q.p % 3 != 1) return WCase::C;
    if ((q.p == 2 || q.p == 3) && q.a % 2 == 1 && t2 == u128(q.q) * q.p)
        return WCase::D;
    if (t == 0 && (q.a % 2 == 1 || q.p % 4 != 1)) return WCase::E;
    return WCase::None;
}

Status waterhouse_status(const PrimePower& q, i64 t) {
    switch (waterhouse_case(q, t)) {
        case WCase::A: return Status::Ordinary;
        case WCase::None: return Status::Empty;
        default: return Status::Supersingular;
    }
}

int kronecker_symbol(i64 a, u64 n) {
    // (a|n) for n > 0, via the usual reciprocity recursion with the 2-supplement
    if (n == 0) fail(Err::InvalidArgument, "Kronecker symbol with n = 0");
    int sign = 1;
    u64 aa;
    {
        i64 r = a % static_cast<i64>(n >= 2 ? n : 1);
        // normalize a modulo nothing yet; handle sign through (-1|n)
        if (a < 0) {
            // (-1|n) for n odd: (-1)^((n-1)/2); factors of 2 handled below
            aa = static_cast<u64>(-a);
            u64 nodd = n;
            while (nodd % 2 == 0) nodd /= 2;
            if (nodd % 4 == 3) sign = -sign;
        } else {
            aa = static_cast<u64>(a);
        }
        (void)r;
    }
    // strip factors of 2 from n: (a|2) = 0 if a even, else (-1)^((a^2-1)/8)
    while (n % 2 == 0) {
        if (aa % 2 == 0) return 0;
        u64 m = aa % 8;
        if (m == 3 || m == 5) sign = -sign;
        n /= 2;
    }
    if (n == 1) return sign;
    aa %= n;
    // now a Jacobi symbol (aa|n), n odd > 1
    u64 num = aa, den = n;
    int s = 1;
    while (num != 0) {
        while (num % 2 == 0) {
            num /= 2;
            u64 m = den % 8;
            if (m == 3 || m == 5) s = -s;
        }
        std::swap(num, den);
        if (num % 4 == 3 && den % 4 == 3) s = -s;
        num %= den;
    }
    if (den != 1) return 0;
    return sign * s;
}

SplitType split_type(i64 D, u64 p) {
    if (D >= 0) fail(Err::NotFundamental, "fundamental discriminant must be negative");
    i64 m = ((D % 4) + 4) % 4;
    if (m != 0 && m != 1) fail(Err::NotFundamental, "not a discriminant");
    if (m == 1) {
        u64 n = static_cast<u64>(-D);
        for (auto [q, e] : factorize(n))
            if (e > 1) fail(Err::NotFundamental, "not squarefree");
    } else {
        i64 quarter = D / 4; // signed: D = 4m with m = 2,3 mod 4 squarefree
        i64 r = ((quarter % 4) + 4) % 4;
        if (r != 2 && r != 3) fail(Err::NotFundamental, "D/4 = 2,3 mod 4 required");
        for (auto [q, e] : factorize(static_cast<u64>(-quarter)))
            if (e > 1) fail(Err::NotFundamental, "not fundamental");
    }
    u64 absD = static_cast<u64>(-D);
    if (absD % p == 0) return SplitType::Ramified;
    return kronecker_symbol(D, p) == 1 ? SplitType::Split : SplitType::Inert;
}

PairRecord classify_pair(const PrimePower& q1, const PrimePower& q2) {
    auto inv = pair_invariants(q1, q2);
    PairRecord rec;
    rec.q1 = q1;
    rec.q2 = q2;
    rec.t1 = inv.t1;
    rec.t2 = inv.t2;
    rec.delta = inv.delta;
    rec.case1 = waterhouse_case(q1, rec.t1);
    rec.case2 = waterhouse_case(q2, rec.t2);
    rec.e1 = waterhouse_status(q1, rec.t1);
    rec.e2 = waterhouse_status(q2, rec.t2);
    if (rec.delta < 0) {
        auto [f, D] = decompose_discriminant(rec.delta);
        rec.conductor_f = f;
        rec.fundamental_D = D;
        rec.split1 = split_type(D, q1.p);
        rec.split2 = split_type(D, q2.p);
    }
    return rec;
}

bool exceptional_flag(const PairRecord& rec) {
    if (!rec.odd_pair()) fail(Err::NotOddPair, "defined for odd pairs only");
    auto side = [&](const PrimePower& q, i64 t) {
        if (q.a <= 2) return false; // Corollary: a_i <= 2 rules it out
        u64 abst = static_cast<u64>(t < 0 ? -t : t);
        unsigned b = 0;
        while (abst % q.p == 0) {
            abst /= q.p;
            ++b;
        }
        if (b < 1 || q.a <= 2 * b) return false;
        // p^(2b) || delta
        u64 n = static_cast<u64>(-rec.delta);
        unsigned v = 0;
        while (n % q.p == 0) {
            n /= q.p;
            ++v;
        }
        return v == 2 * b;
    };
    return side(rec.q1, rec.t1) && side(rec.q2, rec.t2);
}

EvenSsCase even_ss_case(const PairRecord& rec) {
    if (rec.q1.p != 2 || rec.e1 != Status::Supersingular)
        fail(Err::NotEvenSupersingular, "needs even q1 with supersingular E1");
    const u64 q1 = rec.q1.q, q2 = rec.q2.q;
    u64 abst = static_cast<u64>(rec.t1 < 0 ? -rec.t1 : rec.t1);
    if (u128(abst) * abst == u128(4) * q1) {
        // t1 = +-2^((a1+2)/2): delta = 0 cases of the theorem
        if (q1 == 64 && q2 == 81) return EvenSsCase::Special_2p6_3p4;
        if (rec.q2.a == 2) {
            u64 p2 = rec.q2.p;
            u64 half = rec.q1.a / 2;
            if (p2 == (u64(1) << half) + 1) {
                // 2^half + 1 prime forces half = 2^n (Fermat)
                return EvenSsCase::FermatSquare;
            }
            if (p2 + 1 == (u64(1) << half)) return EvenSsCase::MersenneSquare;
        }
        fail(Err::InvalidArgument, "delta = 0 pair outside the classified list");
    }
    if (rec.t1 == 2 && q1 == 4 && q2 == 3) return EvenSsCase::Pair_4_3;
    return EvenSsCase::OrdinaryOtherSide;
}

std::vector<std::pair<u64, u64>> consecutive_prime_power_scan(u64 bound) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 x = 4; x <= bound; x *= 2) {
        for (u64 nb : {x - 1, x + 1}) {
            if (nb > bound) continue;
            auto pp = factor_prime_power(nb);
            if (pp && pp->p != 2 && pp->a >= 2) out.emplace_back(x, nb);
        }
        if (x > bound / 2) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

void enumerate_hasse_pairs(u64 max_q, bool odd_only,
                           const std::function<void(const PrimePower&,
                                                    const PrimePower&)>& fn) {
    if (max_q > (u64(1) << 32)) fail(Err::BoundTooLarge, "max_q above 2^32");
    if (max_q < 3) return;
    // higher prime powers p^a, a >= 2 (sparse; primes stream separately)
    std::vector<PrimePower> powers;
    for (u64 p = 2; p * p <= max_q; ++p) {
        if (!is_prime_u64(p)) continue;
        u64 v = p * p;
        unsigned a = 2;
        while (v <= max_q) {
            powers.push_back(PrimePower{v, p, a});
            if (v > max_q / p) break;
            v *= p;
            ++a;
        }
    }
    std::sort(powers.begin(), powers.end(),
              [](const PrimePower& x, const PrimePower& y) { return x.q < y.q; });

    // sliding window over the merged ascending prime-power stream; the front
    // element is paired once every partner within its Hasse interval is known
    std::deque<PrimePower> win;
    size_t next_power = 0;
    auto flush = [&](u64 tail_q, bool final) {
        while (!win.empty()) {
            const PrimePower a = win.front();
            u64 limit = a.q + 2 * isqrt(a.q) + 2;
            if (!final && tail_q <= limit) break;
            if (!(odd_only && a.p == 2)) {
                for (size_t j = 1; j < win.size(); ++j) {
                    const PrimePower& b = win[j];
                    i128 t = i128(b.q) + 1 - i128(a.q);
                    if (t * t > i128(4) * b.q) break;
                    if (odd_only && b.p == 2) continue;
                    fn(a, b);
                }
            }
            win.pop_front();
        }
    };
    auto push = [&](const PrimePower& pp) {
        win.push_back(pp);
        flush(pp.q, false);
    };
    for_primes_in(2, max_q, [&](u64 p) {
        while (next_power < powers.size() && powers[next_power].q < p)
            push(powers[next_power++]);
        push(PrimePower{p, p, 1});
    });
    while (next_power < powers.size()) push(powers[next_power++]);
    flush(0, true);
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Ordinary: return "ordinary";
        case Status::Supersingular: return "supersingular";
        default: return "empty";
    }
}

std::string split_name(SplitType s) {
    switch (s) {
        case SplitType::Split: return "split";
        case SplitType::Inert: return "inert";
        case SplitType::Ramified: return "ramified";
        default: return "undefined";
    }
}

std::string table_cell(const PairRecord& rec) {
    return std::string(rec.odd_pair() ? "odd:" : "nonodd:") +
           status_name(rec.e1) + "-" + status_name(rec.e2);
}

} // namespace hasse
