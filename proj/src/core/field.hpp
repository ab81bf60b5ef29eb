// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_FIELD_HPP
#define HASSEPAIRS_CORE_FIELD_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/intutil.hpp"

namespace hasse {

struct FieldDesc;
using Field = std::shared_ptr<const FieldDesc>;

/// F_{p^a} in polynomial basis over a deterministic irreducible modulus:
/// the monic degree-a polynomial whose coefficient vector, read as a base-p
/// integer with the constant term least significant, is minimal.
struct FieldDesc {
    u64 p = 0;
    unsigned a = 1;
    std::vector<u64> modulus; // a+1 residues, constant term first, monic
    u128 q = 0;
    bool q_in_u64 = false;
    u64 q64 = 0; // valid iff q_in_u64

    bool same(const FieldDesc& o) const {
        return p == o.p && a == o.a && modulus == o.modulus;
    }

    // lazily built per-field tables, shared across threads
    const std::vector<uint8_t>& square_table() const;   // odd char, q <= 2^24
    const std::vector<uint8_t>& trace_table() const;    // char 2,  q <= 2^24
    u64 generator_index() const;                        // q <= 2^24
    const std::vector<u64>& nonresidue() const;         // odd char digits

  private:
    mutable std::once_flag sq_once_, tr_once_, gen_once_, nr_once_;
    mutable std::vector<uint8_t> squares_, traces_;
    mutable u64 gen_ = 0;
    mutable std::vector<u64> nonres_;
};

Field make_field(u64 p, unsigned a);

/// Value-type field element; `owner` points at the FieldDesc that created it
/// (kept alive by the caller's Field handle).
struct Fe {
    const FieldDesc* f = nullptr;
    std::vector<u64> c; // length a, entries in [0, p)

    bool is_zero() const {
        for (u64 v : c)
            if (v) return false;
        return true;
    }
    bool operator==(const Fe& o) const { return f->same(*o.f) && c == o.c; }
    bool operator!=(const Fe& o) const { return !(*this == o); }
    /// lexicographic on the coordinate sequence, constant term first
    bool operator<(const Fe& o) const { return c < o.c; }
};

Fe fe_zero(const Field& f);
Fe fe_one(const Field& f);
Fe fe_from_int(const Field& f, i64 v);
Fe fe_from_digits(const Field& f, const std::vector<u64>& digits);

Fe fe_add(const Fe& x, const Fe& y);
Fe fe_sub(const Fe& x, const Fe& y);
Fe fe_neg(const Fe& x);
Fe fe_mul(const Fe& x, const Fe& y);
Fe fe_inv(const Fe& x);
Fe fe_div(const Fe& x, const Fe& y);
Fe fe_pow(const Fe& x, u128 e);
Fe fe_mul_int(const Fe& x, i64 k);

/// Frobenius x -> x^p
Fe fe_frob(const Fe& x);

/// Square root: Tonelli-Shanks in odd characteristic (absent for
/// non-residues), x^(2^(a-1)) in characteristic 2.  When present, returns
/// the lexicographically smaller of the two roots.
std::optional<Fe> fe_sqrt(const Fe& x);

/// All y with y^2 + a y = b in characteristic 2; size 0 or 2, sorted.
std::vector<Fe> solve_artin_schreier(const Fe& a, const Fe& b);

/// Roots with algebraic multiplicity of sum coeffs[i] x^i, by exhaustive
/// evaluation (q <= 2^20) plus repeated synthetic division.
std::vector<std::pair<Fe, unsigned>> poly_roots(const std::vector<Fe>& coeffs,
                                                const Field& field);

/// Value mod p of a signed decimal string, streaming (no bignum).
u64 decimal_mod(const std::string& s, u64 p);

// canonical (lexicographic) element traversal and integer indexing
u64 fe_index(const Fe& x);                   // sum c_i p^i, needs q_in_u64
Fe fe_at_index(const Field& f, u64 index);
bool lex_next(std::vector<u64>& digits, u64 p); // false after last element

/// absolute trace down to F_p, returned as an integer in [0, p)
u64 fe_abs_trace(const Fe& x);

// Raw digit-buffer kernels (length-a u64 buffers, no allocation); the hot
// loops in point counting and root scans run on these.
void fe_raw_mul(const FieldDesc& F, const u64* x, const u64* y, u64* out);
void fe_raw_add(const FieldDesc& F, const u64* x, const u64* y, u64* out);
void fe_raw_pow(const FieldDesc& F, const u64* x, u128 e, u64* out);
u64 fe_raw_index(const FieldDesc& F, const u64* x);

std::string fe_to_string(const Fe& x); // "7" for prime fields, "[c0,c1,..]" else

} // namespace hasse

#endif
