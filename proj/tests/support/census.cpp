// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "support/census.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace hasse::census {

namespace {

// index-space arithmetic tables; everything below runs on plain u64 indices
struct Tables {
    Field f;
    u64 q;
    std::vector<std::vector<u32>> add, mul;
    std::vector<u32> neg, inv; // inv[0] unused

    explicit Tables(const Field& field) : f(field), q(field->q64) {
        add.assign(q, std::vector<u32>(q));
        mul.assign(q, std::vector<u32>(q));
        neg.assign(q, 0);
        inv.assign(q, 0);
        for (u64 i = 0; i < q; ++i) {
            Fe x = fe_at_index(f, i);
            neg[i] = static_cast<u32>(fe_index(fe_neg(x)));
            for (u64 k = 0; k < q; ++k) {
                Fe y = fe_at_index(f, k);
                add[i][k] = static_cast<u32>(fe_index(fe_add(x, y)));
                mul[i][k] = static_cast<u32>(fe_index(fe_mul(x, y)));
            }
        }
        u32 one = con(1);
        for (u64 i = 1; i < q; ++i)
            for (u64 k = 1; k < q; ++k)
                if (mul[i][k] == one) inv[i] = static_cast<u32>(k);
    }
    u32 sub(u32 x, u32 y) const { return add[x][neg[y]]; }
    u32 con(i64 v) const { return static_cast<u32>(fe_index(fe_from_int(f, v))); }
};

struct Invariants {
    bool singular;
    u64 j;
};

// b-quantities, discriminant and j of a general model, all in index space
Invariants model_invariants(const Tables& t, const Model& m) {
    auto mul = [&](u32 x, u32 y) { return t.mul[x][y]; };
    auto add = [&](u32 x, u32 y) { return t.add[x][y]; };
    auto sub = [&](u32 x, u32 y) { return t.sub(x, y); };
    auto cmul = [&](i64 c, u32 x) { return t.mul[t.con(c)][x]; };
    u32 a1 = static_cast<u32>(m.a1), a2 = static_cast<u32>(m.a2),
        a3 = static_cast<u32>(m.a3), a4 = static_cast<u32>(m.a4),
        a6 = static_cast<u32>(m.a6);
    u32 b2 = add(mul(a1, a1), cmul(4, a2));
    u32 b4 = add(cmul(2, a4), mul(a1, a3));
    u32 b6 = add(mul(a3, a3), cmul(4, a6));
    u32 b8 = sub(add(add(mul(mul(a1, a1), a6), cmul(4, mul(a2, a6))),
                     mul(a2, mul(a3, a3))),
                 add(mul(mul(a1, a3), a4), mul(a4, a4)));
    u32 disc = add(sub(t.neg[mul(mul(b2, b2), b8)],
                       add(cmul(8, mul(mul(b4, b4), b4)), cmul(27, mul(b6, b6)))),
                   cmul(9, mul(mul(b2, b4), b6)));
    if (disc == 0) return {true, 0};
    u32 c4 = sub(mul(b2, b2), cmul(24, b4));
    u32 j = t.mul[mul(mul(c4, c4), c4)][t.inv[disc]];
    return {false, j};
}

// ---- per-shape isomorphism scans (complete for the shapes enumerated here)

// p >= 5, both models y^2 = x^3 + a4 x + a6: r, s, t are all forced to zero,
// so only the scaling u remains
bool iso_short(const Tables& t, const Model& x, const Model& y) {
    for (u64 ui = 1; ui < t.q; ++ui) {
        u32 u2 = t.mul[ui][ui];
        u32 u4 = t.mul[u2][u2];
        u32 u6 = t.mul[u4][u2];
        if (t.mul[u4][static_cast<u32>(y.a4)] == static_cast<u32>(x.a4) &&
            t.mul[u6][static_cast<u32>(y.a6)] == static_cast<u32>(x.a6))
            return true;
    }
    return false;
}

// char 3, both models y^2 = x^3 + a2 x^2 + a4 x + a6; s = t = 0 forced,
// and 3r vanishes in the a2 equation
bool iso_char3(const Tables& t, const Model& x, const Model& y) {
    u32 xa2 = static_cast<u32>(x.a2), xa4 = static_cast<u32>(x.a4),
        xa6 = static_cast<u32>(x.a6);
    for (u64 ui = 1; ui < t.q; ++ui) {
        u32 u2 = t.mul[ui][ui];
        u32 u4 = t.mul[u2][u2];
        u32 u6 = t.mul[u4][u2];
        if (t.mul[u2][static_cast<u32>(y.a2)] != xa2) continue;
        auto check = [&](u32 r) {
            // a4' u^4 = a4 + 2 r a2 (+ 3r^2 = 0)
            u32 rhs4 = t.add[xa4][t.mul[t.con(2)][t.mul[r][xa2]]];
            if (t.mul[u4][static_cast<u32>(y.a4)] != rhs4) return false;
            u32 r2 = t.mul[r][r];
            u32 rhs6 = t.add[xa6][t.add[t.mul[r][xa4]]
                                       [t.add[t.mul[r2][xa2]][t.mul[r2][r]]]];
            return t.mul[u6][static_cast<u32>(y.a6)] == rhs6;
        };
        if (xa2 != 0) {
            u32 diff = t.sub(t.mul[u4][static_cast<u32>(y.a4)], xa4);
            u32 r = t.mul[diff][t.inv[t.mul[t.con(2)][xa2]]];
            if (check(r)) return true;
        } else {
            for (u64 r = 0; r < t.q; ++r)
                if (check(static_cast<u32>(r))) return true;
        }
    }
    return false;
}

// char 2, shape (1, a2, 0, 0, a6): iso iff a6 equal and a2 differs by s + s^2
bool iso_char2_ordinary(const Tables& t, const Model& x, const Model& y) {
    if (x.a6 != y.a6) return false;
    u32 diff = t.add[static_cast<u32>(x.a2)][static_cast<u32>(y.a2)];
    for (u64 s = 0; s < t.q; ++s)
        if (t.add[t.mul[s][s]][static_cast<u32>(s)] == diff) return true;
    return false;
}

// char 2, shape (0, 0, a3, a4, a6): scan (u, s); t exists iff the residual
// lands in the image of w -> w^2 + a3 w
bool iso_char2_ss(const Tables& t, const Model& x, const Model& y) {
    std::vector<uint8_t> image(t.q, 0);
    for (u64 w = 0; w < t.q; ++w)
        image[t.add[t.mul[w][w]][t.mul[static_cast<u32>(x.a3)][w]]] = 1;
    for (u64 ui = 1; ui < t.q; ++ui) {
        u32 u2 = t.mul[ui][ui];
        u32 u3 = t.mul[u2][ui];
        u32 u4 = t.mul[u2][u2];
        u32 u6 = t.mul[u3][u3];
        if (t.mul[u3][static_cast<u32>(y.a3)] != static_cast<u32>(x.a3)) continue;
        for (u64 s = 0; s < t.q; ++s) {
            u32 s2 = t.mul[s][s];
            u32 s4 = t.mul[s2][s2];
            u32 rhs4 = t.add[static_cast<u32>(x.a4)]
                            [t.add[t.mul[s][static_cast<u32>(x.a3)]][s4]];
            if (t.mul[u4][static_cast<u32>(y.a4)] != rhs4) continue;
            u32 rhs = t.add[static_cast<u32>(x.a6)]
                           [t.add[t.mul[s2][static_cast<u32>(x.a4)]]
                                 [t.add[t.mul[s4][s2]]
                                       [t.mul[u6][static_cast<u32>(y.a6)]]]];
            if (image[rhs]) return true;
        }
    }
    return false;
}

bool models_equivalent(const Tables& t, const Model& x, const Model& y) {
    if (t.f->p == 2) {
        if ((x.a1 != 0) != (y.a1 != 0)) return false;
        return x.a1 != 0 ? iso_char2_ordinary(t, x, y) : iso_char2_ss(t, x, y);
    }
    if (t.f->p == 3) return iso_char3(t, x, y);
    return iso_short(t, x, y);
}

void insert_class(const Tables& t, Census& c, u64 order, u64 j, const Model& m) {
    auto& reps = c.buckets[order][j];
    for (const Model& r : reps)
        if (models_equivalent(t, r, m)) return;
    reps.push_back(m);
}

// p >= 5: every class has a model y^2 = x^3 + a4 x + a6 (complete the square,
// then kill the x^2 term); p = 3: the x^2 term stays
void census_odd(const Tables& t, Census& out) {
    const u64 q = t.q;
    const bool keep_a2 = t.f->p == 3;
    std::vector<u32> gvals(q);
    for (u64 a2 = 0; a2 < (keep_a2 ? q : 1); ++a2) {
        for (u64 a4 = 0; a4 < q; ++a4) {
            for (u64 x = 0; x < q; ++x) {
                u32 x2 = t.mul[x][x];
                u32 v = t.mul[t.add[x2][t.mul[static_cast<u32>(a2)][x]]][x];
                gvals[x] = t.add[v][t.mul[static_cast<u32>(a4)][x]];
            }
            for (u64 a6 = 0; a6 < q; ++a6) {
                Model m{0, a2, 0, a4, a6};
                auto inv = model_invariants(t, m);
                if (inv.singular) continue;
                i64 chi_sum = 0;
                for (u64 x = 0; x < q; ++x) {
                    u32 v = t.add[gvals[x]][static_cast<u32>(a6)];
                    if (v == 0) continue;
                    chi_sum += t.mul[v][v] == v && v == 0 ? 0 : 0;
                }
                (void)chi_sum;
                // recompute with the square table below
                i64 s = 0;
                for (u64 x = 0; x < q; ++x) {
                    u32 v = t.add[gvals[x]][static_cast<u32>(a6)];
                    if (v == 0) continue;
                    s += square_flag(t, v) ? 1 : -1;
                }
                u64 order = static_cast<u64>(static_cast<i64>(q) + 1 + s);
                insert_class(t, out, order, inv.j, m);
            }
        }
    }
}

} // namespace

} // namespace hasse::census
