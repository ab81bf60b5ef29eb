// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_CURVES_HPP
#define HASSEPAIRS_CORE_CURVES_HPP

#include <vector>

#include "core/field.hpp"
#include "core/pairs.hpp"

namespace hasse {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct CurveModel {
    Field field;
    Fe a1, a2, a3, a4, a6;
};

CurveModel make_curve(const Field& f, const Fe& a1, const Fe& a2, const Fe& a3,
                      const Fe& a4, const Fe& a6);
CurveModel curve_from_ints(const Field& f, i64 a1, i64 a2, i64 a3, i64 a4, i64 a6);

Fe curve_disc(const CurveModel& e);
bool is_singular(const CurveModel& e);
Fe j_invariant(const CurveModel& e); // SingularModel on singular input

/// Exact |E(F_q)| including infinity; exhaustive in x, q <= 2^24.
u64 count_points(const CurveModel& e);

/// Coefficient-wise p-power image E^(p) (the Frobenius codomain).
CurveModel frobenius_image(const CurveModel& e);

/// F_q-isomorphism of concrete models, decided by explicit admissible
/// transformation search; intended for small fields (census, supersingular
/// dedup, Frobenius matching).
bool models_isomorphic(const CurveModel& e1, const CurveModel& e2);

/// Complete list of F_q-isomorphism class representatives with the given j.
/// Characteristic 2/3 with j = 0 uses the brute-force reduced family and is
/// capped at q <= 2^10 / 3^6 (FieldTooLarge beyond).
std::vector<CurveModel> curves_with_j(const Field& f, const Fe& j);

struct CurveClass {
    CurveModel model;
    Fe j;
    u64 order = 0;
    i64 trace = 0;
};

struct SetEnumeration {
    std::vector<CurveClass> classes; // canonical order: (j lex, coefficients)
    std::vector<Fe> j_set;           // sorted distinct j's
    bool exact = true;               // false: capped supersingular family,
                                     // j_set = {0}, classes empty
};

/// All classes over F_q with |E| = target_order, up to F_q-isomorphism.
SetEnumeration enumerate_set(const Field& f, u64 target_order, unsigned jobs = 1);

bool is_supersingular_class(const CurveClass& c);

} // namespace hasse

#endif
