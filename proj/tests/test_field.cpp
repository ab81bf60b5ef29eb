// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/field.hpp"

using namespace hasse;

TEST_CASE("make_field basics and determinism") {
    Field f7 = make_field(7, 1);
    CHECK(f7->a == 1);
    CHECK(f7->q64 == 7);

    Field f4 = make_field(2, 2);
    CHECK(f4->modulus == std::vector<u64>{1, 1, 1}); // x^2 + x + 1

    // minimal-in-base-p order: x^4 + 2 over F_5 (independent scan oracle)
    Field f625 = make_field(5, 4);
    CHECK(f625->modulus == std::vector<u64>{2, 0, 0, 0, 1});

    Field again = make_field(5, 4);
    CHECK(f625->modulus == again->modulus);

    CHECK_THROWS_AS(make_field(6, 1), Error);
    CHECK_THROWS_AS(make_field(2, 200), Error); // beyond 128 bits
}

TEST_CASE("prime field arithmetic") {
    Field f7 = make_field(7, 1);
    Fe three = fe_from_int(f7, 3);
    CHECK(fe_pow(three, 6) == fe_one(f7)); // Fermat

    Field f587 = make_field(587, 1);
    Fe half = fe_div(fe_one(f587), fe_from_int(f587, 2));
    CHECK(half == fe_from_int(f587, 294));

    CHECK_THROWS_AS(fe_div(fe_one(f7), fe_zero(f7)), Error);
    Field f5 = make_field(5, 1);
    CHECK_THROWS_AS(fe_add(fe_one(f7), fe_one(f5)), Error);
}

TEST_CASE("F_4 multiplication reduces by the modulus") {
    Field f4 = make_field(2, 2);
    Fe gamma = fe_from_digits(f4, {0, 1});
    Fe g2 = fe_mul(gamma, gamma);
    CHECK(g2 == fe_from_digits(f4, {1, 1})); // gamma^2 = gamma + 1
}

TEST_CASE("square roots") {
    Field f7 = make_field(7, 1);
    auto r = fe_sqrt(fe_from_int(f7, 4));
    REQUIRE(r.has_value());
    CHECK(*r == fe_from_int(f7, 2)); // lexicographically smaller of {2, 5}
    CHECK(!fe_sqrt(fe_from_int(f7, 5)).has_value());

    Field f4 = make_field(2, 2);
    Fe gamma = fe_from_digits(f4, {0, 1});
    auto s = fe_sqrt(gamma);
    REQUIRE(s.has_value());
    CHECK(fe_mul(*s, *s) == gamma);
    CHECK(*s == fe_from_digits(f4, {1, 1}));
}

TEST_CASE("sqrt(x^2) returns x or -x, exhaustive over odd fields") {
    for (auto [p, a] : {std::pair<u64, unsigned>{3, 2},
                        {5, 3},
                        {7, 2},
                        {11, 1},
                        {3, 5},
                        {61, 1}}) {
        Field f = make_field(p, a);
        std::vector<u64> d(f->a, 0);
        Fe x = fe_zero(f);
        do {
            x.c = d;
            Fe sq = fe_mul(x, x);
            auto r = fe_sqrt(sq);
            REQUIRE(r.has_value());
            CHECK((*r == x || *r == fe_neg(x)));
        } while (lex_next(d, p));
    }
}

TEST_CASE("multiplicative group order, sampled") {
    std::mt19937_64 rng(12345);
    for (auto [p, a] : {std::pair<u64, unsigned>{2, 16},
                        {3, 9},
                        {251, 2},
                        {65521, 1},
                        {5, 6}}) {
        Field f = make_field(p, a);
        for (int i = 0; i < 100; ++i) {
            u64 idx = rng() % (f->q64 - 1) + 1;
            Fe x = fe_at_index(f, idx);
            CHECK(fe_pow(x, f->q - 1) == fe_one(f));
        }
    }
}

TEST_CASE("Artin-Schreier solutions in characteristic 2") {
    Field f2 = make_field(2, 1);
    auto s0 = solve_artin_schreier(fe_one(f2), fe_zero(f2));
    REQUIRE(s0.size() == 2); // y^2 + y = 0: {0, 1}
    CHECK(s0[0] == fe_zero(f2));
    CHECK(s0[1] == fe_one(f2));
    CHECK(solve_artin_schreier(fe_one(f2), fe_one(f2)).empty()); // trace 1

    Field f4 = make_field(2, 2);
    Fe gamma = fe_from_digits(f4, {0, 1});
    Fe g2 = fe_mul(gamma, gamma);
    auto sols = solve_artin_schreier(gamma, g2); // y^2 + gamma y = gamma^2
    CHECK(sols.size() == 2);
    for (const Fe& y : sols)
        CHECK(fe_add(fe_mul(y, y), fe_mul(gamma, y)) == g2);

    CHECK_THROWS_AS(solve_artin_schreier(fe_zero(f4), g2), Error);

    // cardinality matches the trace criterion over a few fields
    for (unsigned a : {1u, 2u, 3u, 4u, 6u}) {
        Field f = make_field(2, a);
        std::mt19937_64 rng(a);
        for (int i = 0; i < 40; ++i) {
            Fe av = fe_at_index(f, rng() % (f->q64 - 1) + 1);
            Fe bv = fe_at_index(f, rng() % f->q64);
            Fe c = fe_div(bv, fe_mul(av, av));
            auto sols2 = solve_artin_schreier(av, bv);
            CHECK(sols2.size() == (fe_abs_trace(c) == 0 ? 2 : 0));
        }
    }
}

namespace {

// independent multiplicity oracle: Hasse-derivative coefficients of f(r + t)
unsigned taylor_multiplicity(const std::vector<Fe>& cs, const Fe& r) {
    size_t n = cs.size();
    Fe zero{cs[0].f, std::vector<u64>(cs[0].f->a, 0)};
    std::vector<Fe> shifted(n, zero);
    // binomial expansion, exact in any characteristic
    for (size_t i = 0; i < n; ++i) {
        // cs[i] * (t + r)^i: walk Pascal's triangle row by row
        std::vector<Fe> row{cs[i]};
        for (size_t step = 0; step < i; ++step) {
            std::vector<Fe> next(row.size() + 1, zero);
            for (size_t k = 0; k < row.size(); ++k) {
                next[k] = fe_add(next[k], fe_mul(row[k], r));
                next[k + 1] = fe_add(next[k + 1], row[k]);
            }
            row = next;
        }
        for (size_t k = 0; k < row.size(); ++k)
            shifted[k] = fe_add(shifted[k], row[k]);
    }
    for (size_t k = 0; k < n; ++k)
        if (!shifted[k].is_zero()) return static_cast<unsigned>(k);
    return static_cast<unsigned>(n);
}

} // namespace

TEST_CASE("poly_roots fixtures") {
    Field f7 = make_field(7, 1);
    // x^2 - 1
    std::vector<Fe> p1{fe_from_int(f7, -1), fe_zero(f7), fe_one(f7)};
    auto r1 = poly_roots(p1, f7);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].first == fe_from_int(f7, 1));
    CHECK(r1[0].second == 1);
    CHECK(r1[1].first == fe_from_int(f7, 6));
    CHECK(r1[1].second == 1);
    // (x - 3)^2
    std::vector<Fe> p2{fe_from_int(f7, 9), fe_from_int(f7, -6), fe_one(f7)};
    auto r2 = poly_roots(p2, f7);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].first == fe_from_int(f7, 3));
    CHECK(r2[0].second == 2);

    CHECK_THROWS_AS(poly_roots({fe_zero(f7)}, f7), Error);
}

TEST_CASE("poly_roots against brute evaluation with Taylor multiplicities") {
    std::mt19937_64 rng(99);
    for (auto [p, a] : {std::pair<u64, unsigned>{7, 1}, {2, 5}, {3, 3}, {101, 1},
                        {5, 2}}) {
        Field f = make_field(p, a);
        for (int trial = 0; trial < 60; ++trial) {
            unsigned deg = 1 + rng() % 8;
            std::vector<Fe> cs;
            for (unsigned i = 0; i <= deg; ++i)
                cs.push_back(fe_at_index(f, rng() % f->q64));
            if (cs.back().is_zero()) cs.back() = fe_one(f);
            auto roots = poly_roots(cs, f);
            // every reported root evaluates to zero with the right multiplicity
            u64 found = 0;
            for (const auto& [r, m] : roots) {
                CHECK(taylor_multiplicity(cs, r) == m);
                found += m;
            }
            CHECK(found <= deg);
            // no zero of the polynomial is missed
            std::vector<u64> d(f->a, 0);
            Fe x = fe_zero(f);
            size_t count = 0;
            do {
                x.c = d;
                Fe acc = cs.back();
                for (size_t i = cs.size() - 1; i-- > 0;)
                    acc = fe_add(fe_mul(acc, x), cs[i]);
                if (acc.is_zero()) ++count;
            } while (lex_next(d, p));
            CHECK(count == roots.size());
        }
    }
}

TEST_CASE("decimal_mod") {
    // streamed reduction equals the bignum value computed offline
    CHECK(decimal_mod("141359947154721358697753474691071362751004672000", 7) == 6);
    CHECK(decimal_mod("141359947154721358697753474691071362751004672000", 587) == 222);
    CHECK(decimal_mod("141359947154721358697753474691071362751004672000",
                      2305843009213693951ull) == 152020251757979410ull);
    CHECK(decimal_mod("-1", 5) == 4);
    CHECK(decimal_mod("0", 2) == 0);
    CHECK(decimal_mod("+15", 7) == 1);
    CHECK_THROWS_AS(decimal_mod("", 7), Error);
    CHECK_THROWS_AS(decimal_mod("12x3", 7), Error);
}

TEST_CASE("canonical order helpers") {
    Field f9 = make_field(3, 2);
    // lexicographic traversal starts at (0,0) and increments the last digit
    std::vector<u64> d(2, 0);
    CHECK(lex_next(d, 3));
    CHECK(d == std::vector<u64>{0, 1});
    Fe x = fe_from_digits(f9, {1, 2});
    CHECK(fe_at_index(f9, fe_index(x)) == x);
    CHECK(fe_to_string(x) == "[1,2]");
    CHECK(fe_to_string(fe_from_int(make_field(7, 1), 5)) == "5");
}
