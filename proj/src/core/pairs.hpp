// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_PAIRS_HPP
#define HASSEPAIRS_CORE_PAIRS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/intutil.hpp"

namespace hasse {

struct PrimePower {
    u64 q = 0;
    u64 p = 0;
    unsigned a = 0;
    bool operator==(const PrimePower& o) const { return q == o.q; }
};

std::optional<PrimePower> factor_prime_power(u64 n);

/// Throws NotHasse / InvalidArgument helpers
PrimePower require_prime_power(u64 n);

enum class Status { Ordinary, Supersingular, Empty };

/// Waterhouse case labels; the letters follow the usual statement of the
/// theorem (a: ordinary, b: t = +-2 sqrt(q), c: t = +-sqrt(q), d: t^2 = p^(a+1)
/// with p in {2,3}, e: t = 0).
enum class WCase { A, B, C, D, E, None };

enum class SplitType { Split, Inert, Ramified, Undefined };

struct PairRecord {
    PrimePower q1, q2;
    i64 t1 = 0, t2 = 0;
    i64 delta = 0;
    u64 conductor_f = 0;   // 0 when delta = 0 (degenerate)
    i64 fundamental_D = 0; // 0 when delta = 0
    Status e1 = Status::Empty, e2 = Status::Empty;
    WCase case1 = WCase::None, case2 = WCase::None;
    SplitType split1 = SplitType::Undefined, split2 = SplitType::Undefined;
    bool odd_pair() const { return q1.p != 2 && q2.p != 2; }
};

/// Integer form of |sqrt(q1) - sqrt(q2)| <= 1: (q2 + 1 - q1)^2 <= 4 q2.
bool is_hasse(const PrimePower& q1, const PrimePower& q2);

struct PairInvariants {
    i64 t1, t2, delta;
};
PairInvariants pair_invariants(const PrimePower& q1, const PrimePower& q2);

/// delta = f^2 D with D fundamental (delta < 0 required).
std::pair<u64, i64> decompose_discriminant(i64 delta);

Status waterhouse_status(const PrimePower& q, i64 t);
WCase waterhouse_case(const PrimePower& q, i64 t);

PairRecord classify_pair(const PrimePower& q1, const PrimePower& q2);

/// Kronecker symbol (a|n), n > 0.
int kronecker_symbol(i64 a, u64 n);

SplitType split_type(i64 D, u64 p);

/// Proposition-5.8 exceptional detector: both traces t_i = k_i p_i^{b_i}
/// with b_i >= 1, a_i > 2 b_i and p_i^{2 b_i} || Delta.
bool exceptional_flag(const PairRecord& rec);

enum class EvenSsCase {
    Special_2p6_3p4,
    FermatSquare,
    MersenneSquare,
    Pair_4_3,
    OrdinaryOtherSide,
};
EvenSsCase even_ss_case(const PairRecord& rec);

/// Pairs of consecutive integers (2^alpha, p^beta) with alpha, beta >= 2,
/// both members <= bound.
std::vector<std::pair<u64, u64>> consecutive_prime_power_scan(u64 bound);

/// All ordered Hasse pairs with q1 < q2 <= max_q, sorted by (q1, q2).
void enumerate_hasse_pairs(u64 max_q, bool odd_only,
                           const std::function<void(const PrimePower&,
                                                    const PrimePower&)>& fn);

std::string status_name(Status s);
std::string split_name(SplitType s);
/// Table 1/2 cell, e.g. "odd:supersingular-ordinary".
std::string table_cell(const PairRecord& rec);

} // namespace hasse

#endif
