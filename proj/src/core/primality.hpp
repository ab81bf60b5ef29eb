// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_PRIMALITY_HPP
#define HASSEPAIRS_CORE_PRIMALITY_HPP

#include <functional>
#include <map>
#include <vector>

#include "core/intutil.hpp"

namespace hasse {

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n);

/// Full factorization (trial division + Pollard rho), n < 2^64.
std::map<u64, unsigned> factorize(u64 n);

std::vector<u64> divisors(u64 n);

/// Calls fn(p) for every prime p in [lo, hi], ascending.  Segmented, so hi
/// may be as large as 2^32 (and beyond) without a full-range table.
void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn);

} // namespace hasse

#endif
