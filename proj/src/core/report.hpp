// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_REPORT_HPP
#define HASSEPAIRS_CORE_REPORT_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>

#include "core/graph.hpp"

namespace hasse {

using LineSink = std::function<void(const std::string&)>;

/// Degree set used when the caller does not pass one: {2,3,5,7,11,13} plus
/// any base prime of the pair that has a shipped modular polynomial.
std::set<unsigned> default_degrees(const PairRecord& rec);

std::string classify_json(u64 q1, u64 q2, bool with_curves, unsigned jobs);

struct PairGraphs {
    PairRecord rec;
    IsogenyGraph g1, g2;
};

/// Enumerate both sides and build both graphs.  Throws Unsupported when a
/// supersingular side is involved but allow_ss is false, when a requested
/// color cannot be realized on a supersingular side, or when an enumeration
/// cap is exceeded.
PairGraphs build_pair_graphs(u64 q1, u64 q2, std::set<unsigned> degrees,
                             const ModPolyStore& store, bool allow_ss,
                             unsigned jobs);

std::string graph_json(const PairGraphs& pg);
std::string graph_dot(const PairGraphs& pg);

struct VerifyResult {
    bool isomorphic = false;
    std::string json;
};
VerifyResult verify_iso(u64 q1, u64 q2, std::set<unsigned> degrees,
                        const ModPolyStore& store, bool allow_ss, unsigned jobs);

/// JSON-lines streams; each ends with a {"type":"summary",...} trailer.
/// Deterministic: output is independent of the job count.
u64 search_empty_stream(u64 max_q, unsigned jobs, const LineSink& sink);
struct AndricaOutcome {
    u64 violations = 0;
    u64 equalities = 0;
};
AndricaOutcome andrica_stream(u64 max_q, bool over_prime_powers,
                              const LineSink& sink);
u64 partners_stream(u64 max_p, bool emit_counts, unsigned jobs,
                    const LineSink& sink);
void enumerate_stream(u64 max_q, const std::string& cell_filter, bool odd_only,
                      unsigned jobs, const LineSink& sink);

} // namespace hasse

#endif
