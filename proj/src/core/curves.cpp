// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "core/curves.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

namespace hasse {

namespace {

struct BQuantities {
    Fe b2, b4, b6, b8;
};

BQuantities b_quantities(const CurveModel& e) {
    BQuantities b{fe_zero(e.field), fe_zero(e.field), fe_zero(e.field),
                  fe_zero(e.field)};
    b.b2 = fe_add(fe_mul(e.a1, e.a1), fe_mul_int(e.a2, 4));
    b.b4 = fe_add(fe_mul_int(e.a4, 2), fe_mul(e.a1, e.a3));
    b.b6 = fe_add(fe_mul(e.a3, e.a3), fe_mul_int(e.a6, 4));
    // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
    Fe t = fe_mul(fe_mul(e.a1, e.a1), e.a6);
    t = fe_add(t, fe_mul_int(fe_mul(e.a2, e.a6), 4));
    t = fe_sub(t, fe_mul(fe_mul(e.a1, e.a3), e.a4));
    t = fe_add(t, fe_mul(e.a2, fe_mul(e.a3, e.a3)));
    t = fe_sub(t, fe_mul(e.a4, e.a4));
    b.b8 = t;
    return b;
}

} // namespace

CurveModel make_curve(const Field& f, const Fe& a1, const Fe& a2, const Fe& a3,
                      const Fe& a4, const Fe& a6) {
    return CurveModel{f, a1, a2, a3, a4, a6};
}

CurveModel curve_from_ints(const Field& f, i64 a1, i64 a2, i64 a3, i64 a4, i64 a6) {
    return CurveModel{f, fe_from_int(f, a1), fe_from_int(f, a2),
                      fe_from_int(f, a3), fe_from_int(f, a4), fe_from_int(f, a6)};
}

Fe curve_disc(const CurveModel& e) {
    auto b = b_quantities(e);
    // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    Fe d = fe_neg(fe_mul(fe_mul(b.b2, b.b2), b.b8));
    d = fe_sub(d, fe_mul_int(fe_mul(fe_mul(b.b4, b.b4), b.b4), 8));
    d = fe_sub(d, fe_mul_int(fe_mul(b.b6, b.b6), 27));
    d = fe_add(d, fe_mul_int(fe_mul(fe_mul(b.b2, b.b4), b.b6), 9));
    return d;
}

bool is_singular(const CurveModel& e) { return curve_disc(e).is_zero(); }

Fe j_invariant(const CurveModel& e) {
    Fe disc = curve_disc(e);
    if (disc.is_zero()) fail(Err::SingularModel, "singular Weierstrass model");
    auto b = b_quantities(e);
    Fe c4 = fe_sub(fe_mul(b.b2, b.b2), fe_mul_int(b.b4, 24));
    return fe_div(fe_mul(fe_mul(c4, c4), c4), disc);
}

namespace {

// exact point count of y^2 = x^3 + A2 x^2 + A4 x + A6 over odd-char F_q
u64 count_bform_raw(const FieldDesc& F, const u64* A2, const u64* A4,
                    const u64* A6) {
    const auto& sq = F.square_table();
    unsigned a = F.a;
    u64 n = 1;
    u64 x[64] = {0}, t[64], v[64];
    std::vector<u64> digits(a, 0);
    do {
        for (unsigned i = 0; i < a; ++i) x[i] = digits[i];
        // v = ((x + A2) x + A4) x + A6
        fe_raw_add(F, x, A2, t);
        fe_raw_mul(F, t, x, v);
        fe_raw_add(F, v, A4, t);
        fe_raw_mul(F, t, x, v);
        fe_raw_add(F, v, A6, t);
        u64 idx = fe_raw_index(F, t);
        if (idx == 0)
            n += 1;
        else if (sq[idx])
            n += 2;
    } while (lex_next(digits, F.p));
    return n;
}

u64 count_char2_raw(const CurveModel& e) {
    const FieldDesc& F = *e.field;
    const auto& tr = F.trace_table();
    unsigned a = F.a;
    u64 n = 1;
    u64 x[64], L[64], R[64], t[64], c[64], inv[64];
    std::vector<u64> digits(a, 0);
    do {
        for (unsigned i = 0; i < a; ++i) x[i] = digits[i];
        // L = a1 x + a3
        fe_raw_mul(F, e.a1.c.data(), x, t);
        fe_raw_add(F, t, e.a3.c.data(), L);
        // R = ((x + a2) x + a4) x + a6
        fe_raw_add(F, x, e.a2.c.data(), t);
        fe_raw_mul(F, t, x, R);
        fe_raw_add(F, R, e.a4.c.data(), t);
        fe_raw_mul(F, t, x, R);
        fe_raw_add(F, R, e.a6.c.data(), t);
        for (unsigned i = 0; i < a; ++i) R[i] = t[i];
        bool lzero = true;
        for (unsigned i = 0; i < a; ++i) lzero &= (L[i] == 0);
        if (lzero) {
            n += 1; // unique y = sqrt(R)
        } else {
            // y^2 + Ly = R has 2 roots iff Tr(R / L^2) = 0
            fe_raw_mul(F, L, L, t);
            fe_raw_pow(F, t, F.q - 2, inv);
            fe_raw_mul(F, R, inv, c);
            if (tr[fe_raw_index(F, c)] == 0) n += 2;
        }
    } while (lex_next(digits, F.p));
    return n;
}

} // namespace

u64 count_points(const CurveModel& e) {
    const FieldDesc& F = *e.field;
    if (!F.q_in_u64 || F.q64 > (1u << 24))
        fail(Err::FieldTooLarge, "point counting beyond 2^24");
    if (is_singular(e)) fail(Err::SingularModel, "singular Weierstrass model");
    if (F.p == 2) return count_char2_raw(e);
    // complete the square: y -> y - (a1 x + a3)/2
    Fe inv2 = fe_inv(fe_from_int(e.field, 2));
    Fe inv4 = fe_mul(inv2, inv2);
    Fe A2 = fe_add(e.a2, fe_mul(fe_mul(e.a1, e.a1), inv4));
    Fe A4 = fe_add(e.a4, fe_mul(fe_mul(e.a1, e.a3), inv2));
    Fe A6 = fe_add(e.a6, fe_mul(fe_mul(e.a3, e.a3), inv4));
    return count_bform_raw(F, A2.c.data(), A4.c.data(), A6.c.data());
}

CurveModel frobenius_image(const CurveModel& e) {
    return CurveModel{e.field,   fe_frob(e.a1), fe_frob(e.a2),
                      fe_frob(e.a3), fe_frob(e.a4), fe_frob(e.a6)};
}

namespace {

struct BForm {
    Fe a2, a4, a6;
};

BForm to_bform(const CurveModel& e) {
    Fe inv2 = fe_inv(fe_from_int(e.field, 2));
    Fe inv4 = fe_mul(inv2, inv2);
    return BForm{fe_add(e.a2, fe_mul(fe_mul(e.a1, e.a1), inv4)),
                 fe_add(e.a4, fe_mul(fe_mul(e.a1, e.a3), inv2)),
                 fe_add(e.a6, fe_mul(fe_mul(e.a3, e.a3), inv4))};
}

bool bforms_isomorphic(const Field& f, const BForm& x, const BForm& y) {
    // s = t = 0 forced; unknowns (u, r):
    //   u^2 a2' = a2 + 3r,  u^4 a4' = a4 + 2 r a2 + 3 r^2,
    //   u^6 a6' = a6 + r a4 + r^2 a2 + r^3
    const u64 p = f->p;
    Fe u = fe_one(f);
    std::vector<u64> ud(f->a, 0);
    do {
        u.c = ud;
        if (u.is_zero()) continue;
        Fe u2 = fe_mul(u, u), u4 = fe_mul(u2, u2), u6 = fe_mul(u4, u2);
        auto check_r = [&](const Fe& r) {
            Fe lhs2 = fe_mul(u2, y.a2);
            if (lhs2 != fe_add(x.a2, fe_mul_int(r, 3))) return false;
            Fe lhs4 = fe_mul(u4, y.a4);
            Fe rhs4 = fe_add(x.a4, fe_add(fe_mul_int(fe_mul(r, x.a2), 2),
                                          fe_mul_int(fe_mul(r, r), 3)));
            if (lhs4 != rhs4) return false;
            Fe lhs6 = fe_mul(u6, y.a6);
            Fe rhs6 = fe_add(x.a6, fe_add(fe_mul(r, x.a4),
                                          fe_add(fe_mul(fe_mul(r, r), x.a2),
                                                 fe_mul(fe_mul(r, r), r))));
            return lhs6 == rhs6;
        };
        if (p == 3) {
            // 3r = 0: a2 fixes u; r from the a4 equation when a2 != 0
            if (fe_mul(u2, y.a2) != x.a2) continue;
            if (!x.a2.is_zero()) {
                // r = (u^4 a4' - a4) / (2 a2)
                Fe r = fe_div(fe_sub(fe_mul(u4, y.a4), x.a4),
                              fe_mul_int(x.a2, 2));
                if (check_r(r)) return true;
            } else {
                std::vector<u64> rd(f->a, 0);
                Fe r = fe_zero(f);
                do {
                    r.c = rd;
                    if (check_r(r)) return true;
                } while (lex_next(rd, p));
            }
        } else {
            // r determined by the a2 equation (3 invertible)
            Fe r = fe_div(fe_sub(fe_mul(u2, y.a2), x.a2), fe_from_int(f, 3));
            if (check_r(r)) return true;
        }
    } while (lex_next(ud, p));
    return false;
}

bool char2_isomorphic(const CurveModel& e1, const CurveModel& e2) {
    const Field& f = e1.field;
    bool ss1 = e1.a1.is_zero(), ss2 = e2.a1.is_zero();
    if (ss1 != ss2) return false;
    if (!ss1) {
        // ordinary shape; tiny fields only (census / fixtures)
        if (f->q64 > (1u << 7)) fail(Err::Unsupported, "char-2 ordinary iso scan cap");
        // u is fixed by a1' = a1/u
        std::vector<u64> ud(f->a, 0), rd(f->a), sd(f->a), td(f->a);
        Fe u = fe_zero(f);
        do {
            u.c = ud;
            if (u.is_zero()) continue;
            if (fe_mul(e2.a1, u) != e1.a1) continue;
            Fe u2 = fe_mul(u, u), u3 = fe_mul(u2, u), u4 = fe_mul(u2, u2),
               u6 = fe_mul(u4, u2);
            rd.assign(f->a, 0);
            do {
                Fe r{f.get(), rd};
                sd.assign(f->a, 0);
                do {
                    Fe s{f.get(), sd};
                    // a2' u^2 = a2 + s a1 + r + s^2   (char 2)
                    Fe rhs2 = fe_add(fe_add(e1.a2, fe_mul(s, e1.a1)),
                                     fe_add(r, fe_mul(s, s)));
                    if (fe_mul(e2.a2, u2) != rhs2) continue;
                    td.assign(f->a, 0);
                    do {
                        Fe t{f.get(), td};
                        Fe rhs3 = fe_add(e1.a3, fe_mul(r, e1.a1));
                        if (fe_mul(e2.a3, u3) != rhs3) continue;
                        Fe rhs4 = fe_add(
                            fe_add(e1.a4, fe_mul(s, e1.a3)),
                            fe_mul(fe_add(t, fe_mul(r, s)), e1.a1));
                        if (fe_mul(e2.a4, u4) != rhs4) continue;
                        Fe rhs6 = fe_add(
                            fe_add(e1.a6, fe_mul(r, e1.a4)),
                            fe_add(fe_mul(fe_mul(r, r), e1.a2),
                                   fe_add(fe_mul(fe_mul(r, r), r),
                                          fe_add(fe_mul(t, e1.a3),
                                                 fe_add(fe_mul(t, t),
                                                        fe_mul(fe_mul(r, t), e1.a1))))));
                        if (fe_mul(e2.a6, u6) == rhs6) return true;
                    } while (lex_next(td, 2));
                } while (lex_next(sd, 2));
            } while (lex_next(rd, 2));
        } while (lex_next(ud, 2));
        return false;
    }
    // supersingular shape a1 = 0 (and a2 reduced away by r = s^2 below);
    // models coming from the reduced family have a2 = 0 already
    if (!e1.a2.is_zero() || !e2.a2.is_zero())
        fail(Err::Unsupported, "char-2 supersingular iso expects a2 = 0");
    const auto& tr = f->trace_table();
    std::vector<u64> ud(f->a, 0), sd(f->a);
    Fe u = fe_zero(f);
    do {
        u.c = ud;
        if (u.is_zero()) continue;
        Fe u3 = fe_mul(fe_mul(u, u), u), u4 = fe_mul(u3, u),
           u6 = fe_mul(u3, u3);
        if (fe_mul(e2.a3, u3) != e1.a3) continue;
        sd.assign(f->a, 0);
        do {
            Fe s{f.get(), sd};
            Fe s2 = fe_mul(s, s), s4 = fe_mul(s2, s2);
            // a4' u^4 = a4 + s a3 + s^4
            Fe rhs4 = fe_add(fe_add(e1.a4, fe_mul(s, e1.a3)), s4);
            if (fe_mul(e2.a4, u4) != rhs4) continue;
            // t^2 + a3 t = a6 + s^2 a4 + s^6 + u^6 a6'  solvable iff
            // Tr(rhs / a3^2) = 0
            Fe rhs = fe_add(fe_add(e1.a6, fe_mul(s2, e1.a4)),
                            fe_add(fe_mul(s4, s2), fe_mul(u6, e2.a6)));
            Fe c = fe_div(rhs, fe_mul(e1.a3, e1.a3));
            if (tr[fe_index(c)] == 0) return true;
        } while (lex_next(sd, 2));
    } while (lex_next(ud, 2));
    return false;
}

} // namespace

bool models_isomorphic(const CurveModel& e1, const CurveModel& e2) {
    if (!e1.field->same(*e2.field)) fail(Err::FieldMismatch, "different fields");
    if (j_invariant(e1) != j_invariant(e2)) return false;
    if (e1.field->p == 2) return char2_isomorphic(e1, e2);
    return bforms_isomorphic(e1.field, to_bform(e1), to_bform(e2));
}

namespace {

Fe generator_element(const Field& f) {
    return fe_at_index(f, f->generator_index());
}

// coset representatives of (F_q^*)^n: g^0 .. g^(gcd(n, q-1)-1)
std::vector<Fe> power_coset_reps(const Field& f, unsigned n) {
    u64 m = std::gcd<u64>(n, f->q64 - 1);
    std::vector<Fe> reps;
    Fe g = generator_element(f);
    Fe cur = fe_one(f);
    for (u64 i = 0; i < m; ++i) {
        reps.push_back(cur);
        cur = fe_mul(cur, g);
    }
    return reps;
}

// char 3, j = 0 supersingular classes: y^2 = x^3 + a4 x + a6, a4 != 0
std::vector<CurveModel> char3_ss_family(const Field& f) {
    if (f->q64 > 729) fail(Err::FieldTooLarge, "char-3 supersingular cap is 3^6");
    std::vector<CurveModel> out;
    // a6 matters modulo the image of the F_3-linear map r -> r^3 + a4 r
    for (const Fe& a4 : power_coset_reps(f, 4)) {
        std::set<u64> image;
        std::vector<u64> rd(f->a, 0);
        Fe r = fe_zero(f);
        do {
            r.c = rd;
            Fe im = fe_add(fe_mul(fe_mul(r, r), r), fe_mul(a4, r));
            image.insert(fe_index(im));
        } while (lex_next(rd, 3));
        std::set<u64> used;
        std::vector<u64> ed(f->a, 0);
        Fe a6 = fe_zero(f);
        do {
            a6.c = ed;
            u64 idx = fe_index(a6);
            if (used.count(idx)) continue;
            for (u64 s : image) {
                Fe shifted = fe_add(a6, fe_at_index(f, s));
                used.insert(fe_index(shifted));
            }
            out.push_back(make_curve(f, fe_zero(f), fe_zero(f), fe_zero(f), a4, a6));
        } while (lex_next(ed, 3));
    }
    // cosets of distinct (a4, a6) orbits can still merge under combined (u, r)
    std::vector<CurveModel> dedup;
    for (const CurveModel& m : out) {
        bool dup = false;
        for (const CurveModel& k : dedup)
            if (models_isomorphic(k, m)) {
                dup = true;
                break;
            }
        if (!dup) dedup.push_back(m);
    }
    return dedup;
}

// char 2, j = 0 supersingular classes: y^2 + a3 y = x^3 + a4 x + a6, a3 != 0
std::vector<CurveModel> char2_ss_family(const Field& f) {
    if (f->q64 > 1024) fail(Err::FieldTooLarge, "char-2 supersingular cap is 2^10");
    std::vector<CurveModel> out;
    for (const Fe& a3 : power_coset_reps(f, 3)) {
        // a4 modulo image of s -> s^4 + a3 s
        std::set<u64> im4;
        std::vector<u64> sd(f->a, 0);
        Fe s = fe_zero(f);
        do {
            s.c = sd;
            Fe s2 = fe_mul(s, s);
            im4.insert(fe_index(fe_add(fe_mul(s2, s2), fe_mul(a3, s))));
        } while (lex_next(sd, 2));
        std::vector<Fe> a4reps;
        {
            std::set<u64> used;
            std::vector<u64> ad(f->a, 0);
            Fe a4 = fe_zero(f);
            do {
                a4.c = ad;
                if (used.count(fe_index(a4))) continue;
                for (u64 v : im4) used.insert(fe_index(fe_add(a4, fe_at_index(f, v))));
                a4reps.push_back(a4);
            } while (lex_next(ad, 2));
        }
        // a6 modulo image of t -> t^2 + a3 t
        std::set<u64> im6;
        std::vector<u64> td(f->a, 0);
        Fe t = fe_zero(f);
        do {
            t.c = td;
            im6.insert(fe_index(fe_add(fe_mul(t, t), fe_mul(a3, t))));
        } while (lex_next(td, 2));
        std::vector<Fe> a6reps;
        {
            std::set<u64> used;
            std::vector<u64> ed(f->a, 0);
            Fe a6 = fe_zero(f);
            do {
                a6.c = ed;
                if (used.count(fe_index(a6))) continue;
                for (u64 v : im6) used.insert(fe_index(fe_add(a6, fe_at_index(f, v))));
                a6reps.push_back(a6);
            } while (lex_next(ed, 2));
        }
        for (const Fe& a4 : a4reps)
            for (const Fe& a6 : a6reps)
                out.push_back(make_curve(f, fe_zero(f), fe_zero(f), a3, a4, a6));
    }
    std::vector<CurveModel> dedup;
    for (const CurveModel& m : out) {
        bool dup = false;
        for (const CurveModel& k : dedup)
            if (models_isomorphic(k, m)) {
                dup = true;
                break;
            }
        if (!dup) dedup.push_back(m);
    }
    return dedup;
}

Fe smallest_trace_one(const Field& f) {
    std::vector<u64> d(f->a, 0);
    Fe x = fe_zero(f);
    do {
        x.c = d;
        if (fe_abs_trace(x) == 1) return x;
    } while (lex_next(d, 2));
    fail(Err::InvalidArgument, "no trace-1 element"); // unreachable
}

} // namespace

std::vector<CurveModel> curves_with_j(const Field& f, const Fe& j) {
    if (!f->q_in_u64 || f->q64 > (1u << 24))
        fail(Err::FieldTooLarge, "twist families beyond 2^24");
    const u64 p = f->p;
    Fe zero = fe_zero(f);
    if (p == 2) {
        if (j.is_zero()) return char2_ss_family(f);
        Fe a6 = fe_inv(j);
        Fe c = smallest_trace_one(f);
        return {make_curve(f, fe_one(f), zero, zero, zero, a6),
                make_curve(f, fe_one(f), c, zero, zero, a6)};
    }
    if (p == 3) {
        if (j.is_zero()) return char3_ss_family(f);
        Fe b = fe_neg(fe_inv(j));
        Fe d{f.get(), f->nonresidue()};
        Fe d3b = fe_mul(fe_mul(fe_mul(d, d), d), b);
        return {make_curve(f, zero, fe_one(f), zero, zero, b),
                make_curve(f, zero, d, zero, zero, d3b)};
    }
    Fe j1728 = fe_from_int(f, 1728);
    if (j.is_zero()) {
        std::vector<CurveModel> out;
        for (const Fe& b : power_coset_reps(f, 6))
            out.push_back(make_curve(f, zero, zero, zero, zero, b));
        return out;
    }
    if (j == j1728) {
        std::vector<CurveModel> out;
        for (const Fe& a : power_coset_reps(f, 4))
            out.push_back(make_curve(f, zero, zero, zero, a, zero));
        return out;
    }
    Fe k = fe_div(j, fe_sub(j1728, j));
    Fe a4 = fe_mul_int(k, 3), a6 = fe_mul_int(k, 2);
    Fe d{f.get(), f->nonresidue()};
    Fe d2 = fe_mul(d, d), d3 = fe_mul(d2, d);
    return {make_curve(f, zero, zero, zero, a4, a6),
            make_curve(f, zero, zero, zero, fe_mul(d2, a4), fe_mul(d3, a6))};
}

bool is_supersingular_class(const CurveClass& c) {
    i64 p = static_cast<i64>(c.model.field->p);
    return c.trace % p == 0;
}

namespace {

void sort_classes(std::vector<CurveClass>& cs) {
    std::sort(cs.begin(), cs.end(), [](const CurveClass& x, const CurveClass& y) {
        if (x.j.c != y.j.c) return x.j.c < y.j.c;
        auto key = [](const CurveClass& c) {
            return std::tie(c.model.a1.c, c.model.a2.c, c.model.a3.c,
                            c.model.a4.c, c.model.a6.c);
        };
        return key(x) < key(y);
    });
}

} // namespace

SetEnumeration enumerate_set(const Field& f, u64 target_order, unsigned jobs) {
    if (!f->q_in_u64 || f->q64 > (1u << 24))
        fail(Err::FieldTooLarge, "enumeration beyond 2^24");
    const u64 q = f->q64;
    i64 t = static_cast<i64>(q) + 1 - static_cast<i64>(target_order);
    if (i128(t) * t > i128(4) * q)
        fail(Err::TargetOutOfHasseWindow, "order outside the Hasse window");
    PrimePower pp{q, f->p, f->a};
    Status st = waterhouse_status(pp, t);

    SetEnumeration result;
    if (st == Status::Empty) return result;

    bool ordinary = st == Status::Ordinary;
    if (!ordinary && (f->p == 2 || f->p == 3)) {
        // all classes have j = 0; exact only within the brute-force cap
        u64 cap = f->p == 2 ? 1024 : 729;
        if (q > cap) {
            result.exact = false;
            result.j_set = {fe_zero(f)};
            return result;
        }
        for (const CurveModel& m : curves_with_j(f, fe_zero(f))) {
            u64 n = count_points(m);
            if (n == target_order)
                result.classes.push_back(
                    CurveClass{m, j_invariant(m), n, static_cast<i64>(q) + 1 -
                                                          static_cast<i64>(n)});
        }
        sort_classes(result.classes);
        for (const CurveClass& c : result.classes) {
            if (result.j_set.empty() || !(result.j_set.back() == c.j))
                result.j_set.push_back(c.j);
        }
        return result;
    }

    // scan j over F_q; per j the twist family contains every class
    unsigned njobs = std::max(1u, jobs);
    std::vector<std::vector<CurveClass>> found(njobs);
    auto worker = [&](unsigned w) {
        u64 lo = q * w / njobs, hi = q * (w + 1) / njobs;
        for (u64 idx = lo; idx < hi; ++idx) {
            Fe j = fe_at_index(f, idx);
            if ((f->p == 2 || f->p == 3) && j.is_zero()) continue; // supersingular j
            if (f->p > 3 || !j.is_zero()) {
                // special multi-twist j's handled by full family scan
                bool special =
                    f->p > 3 && (j.is_zero() || j == fe_from_int(f, 1728));
                if (special) {
                    for (const CurveModel& m : curves_with_j(f, j)) {
                        u64 n = count_points(m);
                        if (n != target_order) continue;
                        found[w].push_back(CurveClass{
                            m, j, n, static_cast<i64>(q) + 1 - static_cast<i64>(n)});
                        if (ordinary) break; // unique class per (j, order)
                    }
                    continue;
                }
                // two-twist family: count the base model once
                std::vector<CurveModel> fam = curves_with_j(f, j);
                u64 n0 = count_points(fam[0]);
                i64 t0 = static_cast<i64>(q) + 1 - static_cast<i64>(n0);
                if (t0 == t)
                    found[w].push_back(CurveClass{fam[0], j, n0, t0});
                if (-t0 == t && t != 0) {
                    u64 n1 = 2 * (q + 1) - n0;
                    found[w].push_back(CurveClass{fam[1], j, n1, -t0});
                }
                if (t0 == 0 && t == 0) // both twists supersingular
                    found[w].push_back(CurveClass{fam[1], j, n0, 0});
            }
        }
    };
    if (njobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < njobs; ++w) threads.emplace_back(worker, w);
        for (auto& th : threads) th.join();
    }
    for (auto& v : found)
        for (auto& c : v) result.classes.push_back(std::move(c));
    sort_classes(result.classes);
    for (const CurveClass& c : result.classes) {
        if (result.j_set.empty() || !(result.j_set.back() == c.j))
            result.j_set.push_back(c.j);
    }
    return result;
}

} // namespace hasse
