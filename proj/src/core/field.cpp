// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "core/field.hpp"

#include <algorithm>
#include <cassert>

#include "core/primality.hpp"

namespace hasse {

namespace {

// ---- dense polynomial helpers over F_p (coefficient vectors, low first)

using Poly = std::vector<u64>;

void ptrim(Poly& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
}

Poly pmul(const Poly& x, const Poly& y, u64 p) {
    if (x.empty() || y.empty()) return {};
    Poly r(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        for (size_t j = 0; j < y.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(x[i], y[j], p), p);
    }
    return r;
}

// remainder of x by monic m
Poly pmod(Poly x, const Poly& m, u64 p) {
    size_t dm = m.size() - 1;
    ptrim(x);
    while (x.size() > dm) {
        u64 c = x.back();
        size_t shift = x.size() - 1 - dm;
        if (c) {
            for (size_t i = 0; i < m.size(); ++i)
                x[shift + i] = submod(x[shift + i], mulmod(c, m[i], p), p);
        }
        x.pop_back();
        ptrim(x);
    }
    return x;
}

Poly ppowmod(Poly base, u128 e, const Poly& m, u64 p) {
    Poly r{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, u64 p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        u64 lead_inv = powmod(b.back(), p - 2, p);
        Poly bm = b;
        for (u64& v : bm) v = mulmod(v, lead_inv, p);
        a = pmod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const Poly& f, u64 p) {
    unsigned a = static_cast<unsigned>(f.size() - 1);
    if (a == 1) return true;
    // gcd(x^{p^k} - x, f) = 1 for k <= a/2 rules out factors of degree <= a/2
    Poly xp{0, 1};
    for (unsigned k = 1; k <= a / 2; ++k) {
        xp = ppowmod(std::move(xp), p, f, p);
        Poly g = xp;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = submod(g[1], 1, p);
        ptrim(g);
        if (g.empty()) return false; // x^{p^k} = x, so f splits over F_{p^k}
        if (pgcd(f, g, p).size() != 1) return false;
    }
    return true;
}

} // namespace

// ---- raw element kernels on u64[a] buffers

void fe_raw_mul(const FieldDesc& F, const u64* x, const u64* y, u64* out) {
    unsigned a = F.a;
    u64 p = F.p;
    if (a == 1) {
        out[0] = mulmod(x[0], y[0], p);
        return;
    }
    u64 tmp[2 * 64];
    unsigned n = 2 * a - 1;
    for (unsigned i = 0; i < n; ++i) tmp[i] = 0;
    for (unsigned i = 0; i < a; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < a; ++j) {
            if (!y[j]) continue;
            u128 acc = u128(tmp[i + j]) + u128(x[i]) * y[j];
            tmp[i + j] = static_cast<u64>(acc % p);
        }
    }
    for (unsigned d = n; d-- > a;) {
        u64 c = tmp[d];
        if (c) {
            unsigned shift = d - a;
            for (unsigned i = 0; i < a; ++i)
                tmp[shift + i] = submod(tmp[shift + i], mulmod(c, F.modulus[i], p), p);
        }
        tmp[d] = 0;
    }
    for (unsigned i = 0; i < a; ++i) out[i] = tmp[i];
}

void fe_raw_add(const FieldDesc& F, const u64* x, const u64* y, u64* out) {
    for (unsigned i = 0; i < F.a; ++i) out[i] = addmod(x[i], y[i], F.p);
}

void fe_raw_pow(const FieldDesc& F, const u64* x, u128 e, u64* out) {
    u64 b[64], s[64];
    for (unsigned i = 0; i < F.a; ++i) {
        b[i] = x[i];
        out[i] = 0;
    }
    out[0] = 1 % F.p;
    while (e) {
        if (e & 1) {
            fe_raw_mul(F, out, b, s);
            for (unsigned i = 0; i < F.a; ++i) out[i] = s[i];
        }
        fe_raw_mul(F, b, b, s);
        for (unsigned i = 0; i < F.a; ++i) b[i] = s[i];
        e >>= 1;
    }
}

u64 fe_raw_index(const FieldDesc& F, const u64* x) {
    u64 idx = 0;
    for (unsigned i = F.a; i-- > 0;) idx = idx * F.p + x[i];
    return idx;
}

namespace {

void check_owner(const Fe& x, const Fe& y) {
    if (!x.f->same(*y.f))
        fail(Err::FieldMismatch, "operands from different fields");
}

} // namespace

// ------------------------------------------------------------------ FieldDesc

Field make_field(u64 p, unsigned a) {
    if (!is_prime_u64(p)) fail(Err::NonPrimeBase, "base is not prime");
    if (a < 1) fail(Err::InvalidArgument, "extension degree must be >= 1");
    u128 q = 1;
    const u128 lim = ~u128(0);
    for (unsigned i = 0; i < a; ++i) {
        if (q > lim / p) fail(Err::Overflow, "p^a exceeds 128 bits");
        q *= p;
    }
    auto fd = std::make_shared<FieldDesc>();
    fd->p = p;
    fd->a = a;
    fd->q = q;
    fd->q_in_u64 = q <= ~u64(0);
    fd->q64 = fd->q_in_u64 ? static_cast<u64>(q) : 0;
    if (a == 1) {
        fd->modulus = {0, 1}; // elements are plain residues mod p
        return fd;
    }
    // scan monic candidates in base-p order of the low coefficient vector
    std::vector<u64> low(a, 0);
    for (;;) {
        Poly f(low.begin(), low.end());
        f.push_back(1);
        if (is_irreducible(f, p)) {
            fd->modulus = std::move(f);
            return fd;
        }
        unsigned i = 0;
        while (i < a && ++low[i] == p) low[i++] = 0;
        if (i == a) fail(Err::InvalidArgument, "no irreducible found"); // unreachable
    }
}

const std::vector<uint8_t>& FieldDesc::square_table() const {
    std::call_once(sq_once_, [&] {
        if (!q_in_u64 || q64 > (1u << 24))
            fail(Err::FieldTooLarge, "square table beyond 2^24");
        squares_.assign(q64, 0);
        std::vector<u64> d(a, 0), s(a);
        do {
            fe_raw_mul(*this, d.data(), d.data(), s.data());
            u64 idx = 0;
            for (unsigned i = a; i-- > 0;) idx = idx * p + s[i];
            squares_[idx] = 1;
        } while (lex_next(d, p));
    });
    return squares_;
}

const std::vector<uint8_t>& FieldDesc::trace_table() const {
    std::call_once(tr_once_, [&] {
        if (p != 2) fail(Err::InvalidArgument, "trace table is a char-2 helper");
        if (!q_in_u64 || q64 > (1u << 24))
            fail(Err::FieldTooLarge, "trace table beyond 2^24");
        traces_.assign(q64, 0);
        std::vector<u64> d(a, 0), t(a), s(a);
        do {
            // absolute trace: sum of the a Frobenius conjugates
            for (unsigned i = 0; i < a; ++i) t[i] = d[i];
            std::vector<u64> acc(d);
            for (unsigned k = 1; k < a; ++k) {
                fe_raw_mul(*this, t.data(), t.data(), s.data());
                for (unsigned i = 0; i < a; ++i) t[i] = s[i];
                for (unsigned i = 0; i < a; ++i) acc[i] = addmod(acc[i], t[i], p);
            }
            u64 idx = 0;
            for (unsigned i = a; i-- > 0;) idx = idx * p + d[i];
            traces_[idx] = static_cast<uint8_t>(acc[0]);
        } while (lex_next(d, p));
    });
    return traces_;
}

u64 FieldDesc::generator_index() const {
    std::call_once(gen_once_, [&] {
        if (!q_in_u64 || q64 > (1u << 24))
            fail(Err::FieldTooLarge, "generator search beyond 2^24");
        u64 n = q64 - 1;
        auto fac = factorize(n);
        std::vector<u64> d(a, 0);
        do {
            bool zero = true;
            for (u64 v : d) zero &= (v == 0);
            if (zero) continue;
            bool ok = true;
            for (auto [pr, e] : fac) {
                (void)e;
                // d^(n/pr) == 1 ?
                std::vector<u64> r(a, 0), b(d), s(a);
                r[0] = 1;
                u64 ex = n / pr;
                while (ex) {
                    if (ex & 1) {
                        fe_raw_mul(*this, r.data(), b.data(), s.data());
                        r.assign(s.begin(), s.end());
                    }
                    fe_raw_mul(*this, b.data(), b.data(), s.data());
                    b.assign(s.begin(), s.end());
                    ex >>= 1;
                }
                bool is_one = r[0] == 1;
                for (unsigned i = 1; i < a; ++i) is_one &= (r[i] == 0);
                if (is_one) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                u64 idx = 0;
                for (unsigned i = a; i-- > 0;) idx = idx * p + d[i];
                gen_ = idx;
                return;
            }
        } while (lex_next(d, p));
        fail(Err::InvalidArgument, "no generator found"); // unreachable
    });
    return gen_;
}

const std::vector<u64>& FieldDesc::nonresidue() const {
    std::call_once(nr_once_, [&] {
        if (p == 2) fail(Err::InvalidArgument, "no quadratic non-residue in char 2");
        u128 e = (q - 1) / 2;
        std::vector<u64> d(a, 0), r(a), b(a), s(a);
        do {
            std::fill(r.begin(), r.end(), 0);
            r[0] = 1;
            b = d;
            u128 ex = e;
            while (ex) {
                if (ex & 1) {
                    fe_raw_mul(*this, r.data(), b.data(), s.data());
                    r = s;
                }
                fe_raw_mul(*this, b.data(), b.data(), s.data());
                b = s;
                ex >>= 1;
            }
            bool is_one = r[0] == 1;
            for (unsigned i = 1; i < a; ++i) is_one &= (r[i] == 0);
            bool is_zero = true;
            for (u64 v : d) is_zero &= (v == 0);
            if (!is_zero && !is_one) {
                nonres_ = d;
                return;
            }
        } while (lex_next(d, p));
        fail(Err::InvalidArgument, "no non-residue found"); // unreachable
    });
    return nonres_;
}

// ------------------------------------------------------------------- elements

Fe fe_zero(const Field& f) { return Fe{f.get(), std::vector<u64>(f->a, 0)}; }

Fe fe_one(const Field& f) {
    Fe x = fe_zero(f);
    x.c[0] = 1 % f->p;
    return x;
}

Fe fe_from_int(const Field& f, i64 v) {
    Fe x = fe_zero(f);
    i64 m = static_cast<i64>(f->p);
    i64 r = v % m;
    if (r < 0) r += m;
    x.c[0] = static_cast<u64>(r);
    return x;
}

Fe fe_from_digits(const Field& f, const std::vector<u64>& digits) {
    if (digits.size() != f->a) fail(Err::InvalidArgument, "digit count != degree");
    for (u64 d : digits)
        if (d >= f->p) fail(Err::InvalidArgument, "digit out of range");
    return Fe{f.get(), digits};
}

Fe fe_add(const Fe& x, const Fe& y) {
    check_owner(x, y);
    Fe r = x;
    for (unsigned i = 0; i < x.f->a; ++i) r.c[i] = addmod(x.c[i], y.c[i], x.f->p);
    return r;
}

Fe fe_sub(const Fe& x, const Fe& y) {
    check_owner(x, y);
    Fe r = x;
    for (unsigned i = 0; i < x.f->a; ++i) r.c[i] = submod(x.c[i], y.c[i], x.f->p);
    return r;
}

Fe fe_neg(const Fe& x) {
    Fe r = x;
    for (unsigned i = 0; i < x.f->a; ++i) r.c[i] = x.c[i] ? x.f->p - x.c[i] : 0;
    return r;
}

Fe fe_mul(const Fe& x, const Fe& y) {
    check_owner(x, y);
    Fe r = x;
    fe_raw_mul(*x.f, x.c.data(), y.c.data(), r.c.data());
    return r;
}

Fe fe_mul_int(const Fe& x, i64 k) {
    i64 m = static_cast<i64>(x.f->p);
    i64 r = k % m;
    if (r < 0) r += m;
    Fe out = x;
    for (unsigned i = 0; i < x.f->a; ++i)
        out.c[i] = mulmod(x.c[i], static_cast<u64>(r), x.f->p);
    return out;
}

Fe fe_pow(const Fe& x, u128 e) {
    Fe r = x, b = x;
    std::fill(r.c.begin(), r.c.end(), 0);
    r.c[0] = 1 % x.f->p;
    while (e) {
        if (e & 1) r = fe_mul(r, b);
        b = fe_mul(b, b);
        e >>= 1;
    }
    return r;
}

Fe fe_inv(const Fe& x) {
    if (x.is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    return fe_pow(x, x.f->q - 2);
}

Fe fe_div(const Fe& x, const Fe& y) {
    check_owner(x, y);
    if (y.is_zero()) fail(Err::DivisionByZero, "division by zero");
    return fe_mul(x, fe_inv(y));
}

Fe fe_frob(const Fe& x) { return fe_pow(x, x.f->p); }

std::optional<Fe> fe_sqrt(const Fe& x) {
    const FieldDesc& F = *x.f;
    if (F.p == 2) {
        Fe r = x;
        for (unsigned i = 0; i + 1 < F.a; ++i) r = fe_mul(r, r);
        return r;
    }
    if (x.is_zero()) return x;
    u128 e = (F.q - 1) / 2;
    Fe euler = fe_pow(x, e);
    Fe one = x;
    std::fill(one.c.begin(), one.c.end(), 0);
    one.c[0] = 1;
    if (euler != one) return std::nullopt;

    Fe r = one;
    if (F.q % 4 == 3) {
        r = fe_pow(x, (F.q + 1) / 4);
    } else {
        // Tonelli-Shanks
        u128 m = F.q - 1;
        unsigned s = 0;
        while ((m & 1) == 0) {
            m >>= 1;
            ++s;
        }
        Fe z{x.f, F.nonresidue()};
        Fe cc = fe_pow(z, m);
        Fe t = fe_pow(x, m);
        r = fe_pow(x, (m + 1) / 2);
        unsigned mm = s;
        while (t != one) {
            Fe t2 = t;
            unsigned i = 0;
            while (t2 != one) {
                t2 = fe_mul(t2, t2);
                ++i;
            }
            Fe b = cc;
            for (unsigned k = 0; k + i + 1 < mm; ++k) b = fe_mul(b, b);
            r = fe_mul(r, b);
            cc = fe_mul(b, b);
            t = fe_mul(t, cc);
            mm = i;
        }
    }
    Fe other = fe_neg(r);
    return std::min(r, other);
}

std::vector<Fe> solve_artin_schreier(const Fe& acoef, const Fe& b) {
    const FieldDesc& F = *acoef.f;
    if (F.p != 2) fail(Err::InvalidArgument, "Artin-Schreier solve needs char 2");
    check_owner(acoef, b);
    if (acoef.is_zero())
        fail(Err::ZeroLinearCoefficient, "linear coefficient is zero");
    // substitute y = a z:  z^2 + z = b / a^2, an F_2-linear equation in z
    Fe a2 = fe_mul(acoef, acoef);
    Fe c = fe_div(b, a2);
    unsigned a = F.a;
    // columns of the map z -> z^2 + z on the polynomial basis
    std::vector<std::vector<u64>> col(a);
    Fe basis = acoef;
    for (unsigned i = 0; i < a; ++i) {
        std::fill(basis.c.begin(), basis.c.end(), 0);
        basis.c[i] = 1;
        Fe im = fe_add(fe_mul(basis, basis), basis);
        col[i] = im.c;
    }
    // Gaussian elimination over F_2 on the a x (a+1) system
    std::vector<std::vector<u64>> M(a, std::vector<u64>(a + 1, 0));
    for (unsigned r = 0; r < a; ++r) {
        for (unsigned i = 0; i < a; ++i) M[r][i] = col[i][r];
        M[r][a] = c.c[r];
    }
    std::vector<int> pivot_col(a, -1);
    unsigned row = 0;
    for (unsigned cidx = 0; cidx < a && row < a; ++cidx) {
        unsigned pr = row;
        while (pr < a && M[pr][cidx] == 0) ++pr;
        if (pr == a) continue;
        std::swap(M[pr], M[row]);
        for (unsigned r = 0; r < a; ++r) {
            if (r != row && M[r][cidx]) {
                for (unsigned k = 0; k <= a; ++k) M[r][k] ^= M[row][k];
            }
        }
        pivot_col[row] = static_cast<int>(cidx);
        ++row;
    }
    for (unsigned r = row; r < a; ++r)
        if (M[r][a]) return {}; // inconsistent: trace(b/a^2) = 1
    Fe z{acoef.f, std::vector<u64>(a, 0)};
    for (unsigned r = 0; r < row; ++r)
        if (pivot_col[r] >= 0) z.c[pivot_col[r]] = M[r][a];
    Fe one{acoef.f, std::vector<u64>(a, 0)};
    one.c[0] = 1;
    Fe y1 = fe_mul(acoef, z);
    Fe y2 = fe_mul(acoef, fe_add(z, one));
    if (y2 < y1) std::swap(y1, y2);
    return {y1, y2};
}

std::vector<std::pair<Fe, unsigned>> poly_roots(const std::vector<Fe>& coeffs,
                                                const Field& field) {
    std::vector<Fe> cs;
    for (const Fe& c : coeffs) {
        if (!c.f->same(*field))
            fail(Err::FieldMismatch, "coefficient from another field");
        cs.push_back(c);
    }
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    if (cs.empty()) fail(Err::ZeroPolynomial, "zero polynomial has every root");
    if (cs.size() > 65) fail(Err::InvalidArgument, "degree above 64");
    if (!field->q_in_u64 || field->q64 > (1u << 20))
        fail(Err::FieldTooLarge, "root scan beyond 2^20");
    if (cs.size() == 1) return {};

    std::vector<std::pair<Fe, unsigned>> out;
    std::vector<u64> d(field->a, 0);
    Fe x = fe_zero(field);
    do {
        x.c = d;
        // Horner
        Fe acc = cs.back();
        for (size_t i = cs.size() - 1; i-- > 0;) acc = fe_add(fe_mul(acc, x), cs[i]);
        if (acc.is_zero()) {
            // multiplicity by repeated synthetic division
            unsigned mult = 0;
            std::vector<Fe> cur = cs;
            while (cur.size() >= 2) {
                std::vector<Fe> quot(cur.size() - 1, fe_zero(field));
                Fe carry = cur.back();
                for (size_t i = cur.size() - 1; i-- > 0;) {
                    quot[i] = carry;
                    carry = fe_add(cur[i], fe_mul(carry, x));
                }
                if (!carry.is_zero()) break; // remainder nonzero
                ++mult;
                cur = std::move(quot);
            }
            out.emplace_back(x, mult);
        }
    } while (lex_next(d, field->p));
    return out;
}

u64 decimal_mod(const std::string& s, u64 p) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) fail(Err::MalformedDecimal, "no digits");
    u64 r = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') fail(Err::MalformedDecimal, "bad character");
        r = static_cast<u64>((u128(r) * 10 + static_cast<u64>(s[i] - '0')) % p);
    }
    if (neg && r) r = p - r;
    return r;
}

u64 fe_index(const Fe& x) {
    u64 idx = 0;
    for (unsigned i = x.f->a; i-- > 0;) idx = idx * x.f->p + x.c[i];
    return idx;
}

Fe fe_at_index(const Field& f, u64 index) {
    Fe x = fe_zero(f);
    for (unsigned i = 0; i < f->a; ++i) {
        x.c[i] = index % f->p;
        index /= f->p;
    }
    return x;
}

bool lex_next(std::vector<u64>& digits, u64 p) {
    for (size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < p) return true;
        digits[i] = 0;
    }
    return false;
}

u64 fe_abs_trace(const Fe& x) {
    Fe acc = x, conj = x;
    for (unsigned k = 1; k < x.f->a; ++k) {
        conj = fe_pow(conj, x.f->p);
        acc = fe_add(acc, conj);
    }
    return acc.c[0]; // trace lands in the prime field
}

std::string fe_to_string(const Fe& x) {
    if (x.f->a == 1) return std::to_string(x.c[0]);
    std::string s = "[";
    for (unsigned i = 0; i < x.f->a; ++i) {
        if (i) s += ",";
        s += std::to_string(x.c[i]);
    }
    return s + "]";
}

} // namespace hasse
