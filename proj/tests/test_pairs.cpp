// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "core/pairs.hpp"

using namespace hasse;

namespace {
PrimePower pp(u64 n) { return require_prime_power(n); }
} // namespace

TEST_CASE("factor_prime_power") {
    auto r = factor_prime_power(243);
    REQUIRE(r.has_value());
    CHECK(r->p == 3);
    CHECK(r->a == 5);
    auto s = factor_prime_power(22501);
    REQUIRE(s.has_value());
    CHECK(s->p == 22501);
    CHECK(s->a == 1);
    CHECK(!factor_prime_power(12).has_value());
    CHECK(!factor_prime_power(1).has_value());
    auto big = factor_prime_power(u64(22801));
    REQUIRE(big.has_value());
    CHECK(big->p == 151);
    CHECK(big->a == 2);
}

TEST_CASE("is_hasse") {
    CHECK(is_hasse(pp(3), pp(7)));
    CHECK(!is_hasse(pp(5), pp(11)));
    CHECK(is_hasse(pp(81), pp(64))); // the boundary case
    CHECK(is_hasse(pp(64), pp(81)));
    CHECK_THROWS_AS(is_hasse(pp(7), pp(7)), Error);
}

TEST_CASE("pair invariants") {
    auto v = pair_invariants(pp(3), pp(7));
    CHECK(v.t1 == -3);
    CHECK(v.t2 == 5);
    CHECK(v.delta == -3);

    v = pair_invariants(pp(625), pp(587));
    CHECK(v.t1 == 39);
    CHECK(v.t2 == -37);
    CHECK(v.delta == -979);

    // the printed value in the source example is -507, but the defining
    // formula gives -603 = -3^2 * 67, matching the stated factorization
    v = pair_invariants(pp(22801), pp(22501));
    CHECK(v.t1 == 301);
    CHECK(v.t2 == -299);
    CHECK(v.delta == -603);

    CHECK_THROWS_AS(pair_invariants(pp(5), pp(11)), Error);
}

TEST_CASE("decompose_discriminant") {
    CHECK(decompose_discriminant(-1875) == std::pair<u64, i64>{25, -3});
    CHECK(decompose_discriminant(-979) == std::pair<u64, i64>{1, -979});
    CHECK(decompose_discriminant(-12) == std::pair<u64, i64>{2, -3});
    CHECK(decompose_discriminant(-603) == std::pair<u64, i64>{3, -67});
    CHECK(decompose_discriminant(-4) == std::pair<u64, i64>{1, -4});
    CHECK(decompose_discriminant(-32) == std::pair<u64, i64>{2, -8});
    CHECK_THROWS_AS(decompose_discriminant(0), Error);
    CHECK_THROWS_AS(decompose_discriminant(5), Error);
}

TEST_CASE("waterhouse_status fixtures") {
    CHECK(waterhouse_status(pp(3), -3) == Status::Supersingular); // case d
    CHECK(waterhouse_case(pp(3), -3) == WCase::D);
    CHECK(waterhouse_status(pp(7), 5) == Status::Ordinary);
    CHECK(waterhouse_status(pp(49), 7) == Status::Empty); // 7 = 1 mod 3
    CHECK(waterhouse_status(pp(256), 14) == Status::Empty);
    CHECK(waterhouse_status(pp(243), -12) == Status::Empty);
    CHECK(waterhouse_status(pp(64), -16) == Status::Supersingular); // case b
    CHECK(waterhouse_case(pp(64), -16) == WCase::B);
    CHECK(waterhouse_status(pp(25), 5) == Status::Supersingular); // case c
    CHECK(waterhouse_status(pp(7), 0) == Status::Supersingular);  // case e
    CHECK_THROWS_AS(waterhouse_status(pp(7), 8), Error);
}

TEST_CASE("waterhouse case e parity branch") {
    // q = p^2 with p = 1 mod 4: t = 0 empty; p = 3 mod 4: supersingular
    CHECK(waterhouse_status(pp(25), 0) == Status::Empty);
    CHECK(waterhouse_status(pp(49), 0) == Status::Supersingular);
}

TEST_CASE("classify_pair fixtures") {
    auto r = classify_pair(pp(3), pp(7));
    CHECK(r.e1 == Status::Supersingular);
    CHECK(r.e2 == Status::Ordinary);
    CHECK(table_cell(r) == "odd:supersingular-ordinary");

    r = classify_pair(pp(4), pp(3));
    CHECK(r.e1 == Status::Supersingular);
    CHECK(r.e2 == Status::Supersingular);

    r = classify_pair(pp(16), pp(11));
    CHECK(r.e1 == Status::Empty);
    CHECK(r.e2 == Status::Ordinary);

    r = classify_pair(pp(8), pp(7));
    CHECK(r.e1 == Status::Empty);
    CHECK(r.e2 == Status::Supersingular);

    r = classify_pair(pp(256), pp(243));
    CHECK(r.e1 == Status::Empty);
    CHECK(r.e2 == Status::Empty);

    r = classify_pair(pp(2), pp(4));
    CHECK(r.e1 == Status::Ordinary);
    CHECK(r.e2 == Status::Ordinary);
    CHECK(r.delta == -7);

    r = classify_pair(pp(64), pp(81));
    CHECK(r.e1 == Status::Supersingular);
    CHECK(r.e2 == Status::Supersingular);
    CHECK(r.delta == 0);
    CHECK(r.conductor_f == 0);
    CHECK(r.fundamental_D == 0);
    CHECK(r.split1 == SplitType::Undefined);
}

TEST_CASE("split_type fixtures") {
    CHECK(split_type(-3, 3) == SplitType::Ramified);
    CHECK(split_type(-3, 7) == SplitType::Split);
    CHECK(split_type(-3, 17) == SplitType::Inert);
    CHECK(split_type(-67, 151) == SplitType::Split);
    CHECK_THROWS_AS(split_type(-75, 7), Error); // not fundamental
    CHECK_THROWS_AS(split_type(5, 7), Error);
}

TEST_CASE("kronecker symbol spot values") {
    CHECK(kronecker_symbol(-3, 7) == 1);
    CHECK(kronecker_symbol(-3, 17) == -1);
    CHECK(kronecker_symbol(-3, 3) == 0);
    CHECK(kronecker_symbol(-7, 2) == 1);   // -7 = 1 mod 8
    CHECK(kronecker_symbol(-11, 2) == -1); // -11 = 5 mod 8
    CHECK(kronecker_symbol(-979, 5) == 1);
    CHECK(kronecker_symbol(-979, 2) == -1);
}

TEST_CASE("exceptional_flag") {
    CHECK(!exceptional_flag(classify_pair(pp(49), pp(43))));
    CHECK(!exceptional_flag(classify_pair(pp(625), pp(587))));
    CHECK_THROWS_AS(exceptional_flag(classify_pair(pp(4), pp(3))), Error);
    // exhaustive desk sweep: no flagged odd pair
    u64 flagged = 0;
    enumerate_hasse_pairs(10000, true,
                          [&](const PrimePower& a, const PrimePower& b) {
                              if (exceptional_flag(classify_pair(a, b))) ++flagged;
                          });
    CHECK(flagged == 0);
}

TEST_CASE("even_ss_case") {
    CHECK(even_ss_case(classify_pair(pp(64), pp(81))) == EvenSsCase::Special_2p6_3p4);
    CHECK(even_ss_case(classify_pair(pp(16), pp(25))) == EvenSsCase::FermatSquare);
    CHECK(even_ss_case(classify_pair(pp(4), pp(9))) == EvenSsCase::FermatSquare);
    CHECK(even_ss_case(classify_pair(pp(16), pp(9))) == EvenSsCase::MersenneSquare);
    CHECK(even_ss_case(classify_pair(pp(1024), pp(961))) == EvenSsCase::MersenneSquare);
    CHECK(even_ss_case(classify_pair(pp(4), pp(3))) == EvenSsCase::Pair_4_3);
    CHECK(even_ss_case(classify_pair(pp(2), pp(3))) == EvenSsCase::OrdinaryOtherSide);
    CHECK_THROWS_AS(even_ss_case(classify_pair(pp(2), pp(4))), Error);

    // the theorem's dichotomy over a sweep
    enumerate_hasse_pairs(4096, false,
                          [&](const PrimePower& a, const PrimePower& b) {
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            if (x.p != 2) continue;
            PairRecord r = classify_pair(x, y);
            if (r.e1 != Status::Supersingular) continue;
            EvenSsCase c = even_ss_case(r);
            if (c == EvenSsCase::OrdinaryOtherSide)
                CHECK(r.e2 == Status::Ordinary);
            else
                CHECK(r.e2 == Status::Supersingular);
        }
    });
}

TEST_CASE("consecutive_prime_power_scan") {
    CHECK(consecutive_prime_power_scan(1000000) ==
          std::vector<std::pair<u64, u64>>{{8, 9}});
    CHECK(consecutive_prime_power_scan(8).empty()); // 9 excluded by the bound
    CHECK(consecutive_prime_power_scan(100) ==
          std::vector<std::pair<u64, u64>>{{8, 9}});
}

TEST_CASE("enumerate_hasse_pairs small fixtures") {
    std::vector<std::pair<u64, u64>> got;
    enumerate_hasse_pairs(8, false, [&](const PrimePower& a, const PrimePower& b) {
        got.emplace_back(a.q, b.q);
    });
    // verified by hand with the integer predicate (q2+1-q1)^2 <= 4 q2
    std::vector<std::pair<u64, u64>> expect{{2, 3}, {2, 4}, {2, 5}, {3, 4},
                                            {3, 5}, {3, 7}, {4, 5}, {4, 7},
                                            {4, 8}, {5, 7}, {5, 8}, {7, 8}};
    CHECK(got == expect);

    got.clear();
    enumerate_hasse_pairs(7, true, [&](const PrimePower& a, const PrimePower& b) {
        got.emplace_back(a.q, b.q);
    });
    CHECK(got == std::vector<std::pair<u64, u64>>{{3, 5}, {3, 7}, {5, 7}});

    got.clear();
    enumerate_hasse_pairs(2, false, [&](const PrimePower& a, const PrimePower& b) {
        got.emplace_back(a.q, b.q);
    });
    CHECK(got.empty());
}

TEST_CASE("sweep invariants to 10^4") {
    u64 pairs = 0, empty_empty = 0;
    std::set<std::pair<u64, u64>> ee;
    std::vector<std::pair<u64, u64>> pure_prime_ss;
    enumerate_hasse_pairs(10000, false,
                          [&](const PrimePower& a, const PrimePower& b) {
        ++pairs;
        PairRecord r = classify_pair(a, b);
        // linear trace relation and shared discriminant
        CHECK(r.t1 + r.t2 == 2);
        CHECK(i64(r.t1) * r.t1 - 4 * i64(a.q) == r.delta);
        CHECK(i64(r.t2) * r.t2 - 4 * i64(b.q) == r.delta);
        if (a.p == b.p && r.delta != 0)
            CHECK(std::gcd<u64>(static_cast<u64>(-r.delta), a.q * b.q) == 1);
        if (r.odd_pair()) {
            CHECK(!(r.e1 == Status::Supersingular &&
                    r.e2 == Status::Supersingular));
            CHECK(r.delta < 0);
            CHECK(((r.delta % 4) + 4) % 4 == 1);
            u64 root = 0;
            CHECK(!is_perfect_square(static_cast<u64>(-r.delta), &root));
            CHECK((r.split1 == SplitType::Split || r.split2 == SplitType::Split));
        }
        if (a.a == 1) CHECK(r.e1 != Status::Empty); // pure-prime side non-empty
        if (b.a == 1) CHECK(r.e2 != Status::Empty);
        if (a.a == 1 && b.a == 1) {
            if (r.e1 == Status::Supersingular) pure_prime_ss.emplace_back(a.q, b.q);
            if (r.e2 == Status::Supersingular) pure_prime_ss.emplace_back(b.q, a.q);
        }
        for (auto [x, y, st] : {std::tuple{a, b, r.e1}, std::tuple{b, a, r.e2}}) {
            if (x.p == 2 && st == Status::Ordinary) {
                bool listed = (x.q == 2 && y.q == 4) || (x.q == 4 && y.q == 2) ||
                              (x.q == 4 && y.q == 8) || (x.q == 8 && y.q == 4);
                CHECK(listed);
            }
        }
        if (r.e1 == Status::Empty && r.e2 == Status::Empty) {
            ++empty_empty;
            ee.insert({a.q, b.q});
        }
    });
    CHECK(pairs > 1000);
    CHECK(empty_empty == 1);
    CHECK(ee == std::set<std::pair<u64, u64>>{{243, 256}});
    CHECK(pure_prime_ss ==
          std::vector<std::pair<u64, u64>>{{2, 3}, {2, 5}, {3, 7}});
}
