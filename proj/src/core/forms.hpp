// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_FORMS_HPP
#define HASSEPAIRS_CORE_FORMS_HPP

#include <tuple>
#include <vector>

#include "core/intutil.hpp"

namespace hasse {

/// Reduced primitive forms (a, b, c) of discriminant disc < 0:
/// b^2 - 4ac = disc, |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd = 1.
std::vector<std::tuple<u64, i64, u64>> reduced_forms(i64 disc);

/// h(disc) = number of reduced primitive forms; disc < 0, disc = 0,1 mod 4.
u64 class_number(i64 disc);

/// Vertex-count oracle for a pair discriminant delta = f^2 D:
/// sum over g | f of h(g^2 D).
u64 kronecker_class_number(i64 delta);

} // namespace hasse

#endif
