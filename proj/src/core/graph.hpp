// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_GRAPH_HPP
#define HASSEPAIRS_CORE_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "core/curves.hpp"
#include "core/modpoly.hpp"

namespace hasse {

/// Colored directed multigraph on curve classes; color = isogeny degree.
/// For the field's own characteristic p the edges are the Frobenius and (on
/// ordinary vertices) Verschiebung isogenies; every other color l reads the
/// root multiplicities of Phi_l(j, Y).
struct IsogenyGraph {
    Field field;
    std::vector<CurveClass> classes;   // canonical vertex order
    std::vector<std::string> labels;   // j serialization, _A/_B on repeats
    std::vector<unsigned> degrees;     // sorted degree set B
    bool supersingular = false;
    // (from, to, degree) -> multiplicity
    std::map<std::tuple<u32, u32, unsigned>, unsigned> edges;

    unsigned mult(u32 from, u32 to, unsigned ell) const {
        auto it = edges.find({from, to, ell});
        return it == edges.end() ? 0 : it->second;
    }
    size_t size() const { return classes.size(); }
};

IsogenyGraph build_graph(const std::vector<CurveClass>& classes,
                         const std::set<unsigned>& degrees,
                         const ModPolyStore& store, bool allow_ss = false);

/// Root multiplicities of Phi_l(j, Y) restricted to the vertex set.
/// CharacteristicDegree when l is the field characteristic (use Frobenius
/// edges there).
std::vector<std::pair<Fe, unsigned>> edge_multiplicities(
    const Fe& j, unsigned ell, const std::vector<Fe>& vertex_set,
    const ModPolyStore& store);

/// Frobenius permutation j -> j^p on a vertex set of distinct j's.
/// VertexEscapes when the image leaves the set.
std::vector<u32> frobenius_edges(const std::vector<Fe>& j_set);

/// Cycle structure of the own-characteristic Frobenius permutation:
/// all cycles must share one length iota (UnequalCycles otherwise).
std::pair<unsigned, unsigned> frobenius_cycles(const IsogenyGraph& g);

/// Cycle lengths (sorted) of the Frobenius permutation, no uniformity demand.
std::vector<unsigned> frobenius_cycle_lengths(const IsogenyGraph& g);

/// Exact colored-multigraph isomorphism: partition refinement then
/// backtracking.  Returns the vertex bijection g1 -> g2 when isomorphic.
std::optional<std::vector<u32>> graphs_isomorphic(const IsogenyGraph& g1,
                                                  const IsogenyGraph& g2);

/// Deterministic DOT rendering; paired directed edges collapse to one
/// undirected edge, matching the usual drawing convention.
std::string to_dot(const IsogenyGraph& g, const std::string& name);

} // namespace hasse

#endif
