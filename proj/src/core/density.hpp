// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_DENSITY_HPP
#define HASSEPAIRS_CORE_DENSITY_HPP

#include <vector>

#include "core/intutil.hpp"

namespace hasse {

struct SieveTable {
    u64 bound = 0;
    std::vector<bool> is_prime;    // index up to bound
    std::vector<u64> primes;
    std::vector<u64> prime_powers; // sorted, includes the primes
};

SieveTable sieve(u64 x); // x <= 10^8

enum class ScanDomain { Primes, PrimePowers };

struct AndricaReport {
    // consecutive entries (q, q') with sqrt(q') - sqrt(q) > 1
    std::vector<std::pair<u64, u64>> violations;
    // consecutive entries with sqrt(q') - sqrt(q) = 1 exactly
    std::vector<std::pair<u64, u64>> equalities;
    u64 checked = 0;
};

/// Strict-inequality Andrica scan over consecutive primes or prime powers,
/// all comparisons in exact integers.
AndricaReport andrica_scan(const SieveTable& table, ScanDomain over);

/// Hasse pairs sitting exactly on the boundary sqrt(q1) - sqrt(q2) = 1:
/// squares of consecutive integers that are both prime powers.  Reported
/// (smaller, larger), both <= bound.
std::vector<std::pair<u64, u64>> sqrt_gap_one_pairs(const SieveTable& table);

/// Number of primes l != p with (p, l) a Hasse pair.
u64 hasse_partner_count(u64 p, const SieveTable& table);

struct ThresholdException {
    u64 p;
    u64 count;
    double threshold;
};

/// Primes p <= x whose partner count falls below (1/2) sqrt(p)/log p.
/// The threshold is the only floating-point quantity in the module.
std::vector<ThresholdException> threshold_report(const SieveTable& table, u64 x);

} // namespace hasse

#endif
