// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "core/graph.hpp"

#include <algorithm>
#include <sstream>

namespace hasse {

namespace {

std::vector<std::string> make_labels(const std::vector<CurveClass>& classes) {
    std::vector<std::string> labels;
    labels.reserve(classes.size());
    for (size_t i = 0; i < classes.size(); ++i) {
        std::string base = fe_to_string(classes[i].j);
        bool dup = false;
        for (size_t k = 0; k < classes.size(); ++k)
            if (k != i && classes[k].j == classes[i].j) dup = true;
        if (dup) {
            unsigned nth = 0;
            for (size_t k = 0; k < i; ++k)
                if (classes[k].j == classes[i].j) ++nth;
            base += '_';
            base += static_cast<char>('A' + nth);
        }
        labels.push_back(base);
    }
    return labels;
}

} // namespace

std::vector<std::pair<Fe, unsigned>> edge_multiplicities(
    const Fe& j, unsigned ell, const std::vector<Fe>& vertex_set,
    const ModPolyStore& store) {
    if (ell == j.f->p)
        fail(Err::CharacteristicDegree,
             "degree equals the characteristic; use Frobenius edges");
    if (!ModPolyStore::supported(ell))
        fail(Err::UnknownDegree, "degree " + std::to_string(ell));
    Field f(j.f, [](const FieldDesc*) {});
    std::vector<Fe> poly = store.evaluated_at(ell, j);
    std::vector<std::pair<Fe, unsigned>> out;
    for (const auto& [root, mult] : poly_roots(poly, f)) {
        for (const Fe& v : vertex_set) {
            if (v == root) {
                out.emplace_back(root, mult);
                break;
            }
        }
    }
    return out;
}

std::vector<u32> frobenius_edges(const std::vector<Fe>& j_set) {
    std::vector<u32> perm(j_set.size());
    for (size_t i = 0; i < j_set.size(); ++i) {
        Fe image = fe_frob(j_set[i]);
        bool hit = false;
        for (size_t k = 0; k < j_set.size(); ++k) {
            if (j_set[k] == image) {
                perm[i] = static_cast<u32>(k);
                hit = true;
                break;
            }
        }
        if (!hit)
            fail(Err::VertexEscapes, "Frobenius image " + fe_to_string(image) +
                                         " is not a vertex");
    }
    return perm;
}

IsogenyGraph build_graph(const std::vector<CurveClass>& classes,
                         const std::set<unsigned>& degrees,
                         const ModPolyStore& store, bool allow_ss) {
    if (classes.empty()) fail(Err::EmptySet, "no vertices");
    bool ss = is_supersingular_class(classes[0]);
    for (const CurveClass& c : classes)
        if (is_supersingular_class(c) != ss)
            fail(Err::MixedTypes, "mixed ordinary/supersingular classes");

    IsogenyGraph g;
    g.field = classes[0].model.field;
    g.classes = classes;
    g.labels = make_labels(classes);
    g.degrees.assign(degrees.begin(), degrees.end());
    g.supersingular = ss;
    const u64 p = g.field->p;

    if (ss) {
        if (!allow_ss) fail(Err::Unsupported, "supersingular graph not requested");
        for (unsigned ell : degrees)
            if (ell != p)
                fail(Err::Unsupported,
                     "supersingular graphs carry only the Frobenius color");
        // Frobenius permutation on classes via model images
        for (u32 i = 0; i < g.size(); ++i) {
            CurveModel img = frobenius_image(classes[i].model);
            bool hit = false;
            for (u32 k = 0; k < g.size(); ++k) {
                if (classes[k].order == classes[i].order &&
                    models_isomorphic(classes[k].model, img)) {
                    g.edges[{i, k, static_cast<unsigned>(p)}] += 1;
                    hit = true;
                    break;
                }
            }
            if (!hit) fail(Err::VertexEscapes, "Frobenius image leaves the set");
        }
        return g;
    }

    std::vector<Fe> jset;
    for (const CurveClass& c : classes) jset.push_back(c.j);
    for (unsigned ell : degrees) {
        if (ell == p) {
            // Frobenius plus Verschiebung, one each
            std::vector<u32> perm = frobenius_edges(jset);
            for (u32 i = 0; i < g.size(); ++i) {
                g.edges[{i, perm[i], ell}] += 1;
                g.edges[{perm[i], i, ell}] += 1; // dual of the Frobenius into perm[i]
            }
            continue;
        }
        if (!ModPolyStore::supported(ell))
            fail(Err::UnknownDegree, "degree " + std::to_string(ell));
        for (u32 i = 0; i < g.size(); ++i) {
            std::vector<Fe> poly = store.evaluated_at(ell, jset[i]);
            auto roots = poly_roots(poly, g.field);
            for (const auto& [root, mult] : roots) {
                for (u32 k = 0; k < g.size(); ++k) {
                    if (jset[k] == root) {
                        g.edges[{i, k, ell}] += mult;
                        break;
                    }
                }
            }
        }
    }
    return g;
}

std::vector<unsigned> frobenius_cycle_lengths(const IsogenyGraph& g) {
    std::vector<Fe> jset;
    for (const CurveClass& c : g.classes) jset.push_back(c.j);
    std::vector<u32> perm;
    if (g.supersingular) {
        // recover the permutation from the stored Frobenius color
        perm.assign(g.size(), 0);
        for (u32 i = 0; i < g.size(); ++i) {
            bool found = false;
            for (u32 k = 0; k < g.size() && !found; ++k)
                if (g.mult(i, k, static_cast<unsigned>(g.field->p))) {
                    perm[i] = k;
                    found = true;
                }
            if (!found) fail(Err::VertexEscapes, "missing Frobenius edge");
        }
    } else {
        perm = frobenius_edges(jset);
    }
    std::vector<bool> seen(g.size(), false);
    std::vector<unsigned> lengths;
    for (u32 i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        u32 v = i;
        while (!seen[v]) {
            seen[v] = true;
            v = perm[v];
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::pair<unsigned, unsigned> frobenius_cycles(const IsogenyGraph& g) {
    std::vector<unsigned> lengths = frobenius_cycle_lengths(g);
    for (unsigned l : lengths)
        if (l != lengths[0])
            fail(Err::UnequalCycles, "Frobenius cycles of unequal length");
    return {lengths[0], static_cast<unsigned>(lengths.size())};
}

namespace {

// iterative refinement of vertex classes by colored in/out multiplicity
// signatures; returns stable class ids (same scheme for both graphs)
std::vector<u32> refine(const IsogenyGraph& g1, const IsogenyGraph& g2,
                        std::vector<u32>& cls2) {
    size_t n1 = g1.size(), n2 = g2.size();
    std::vector<u32> c1(n1, 0), c2(n2, 0);
    for (;;) {
        using Sig = std::pair<u32, std::vector<std::tuple<unsigned, int, u32, unsigned>>>;
        auto signature = [&](const IsogenyGraph& g, const std::vector<u32>& cls,
                             u32 v) {
            Sig s;
            s.first = cls[v];
            for (const auto& [key, mult] : g.edges) {
                auto [from, to, ell] = key;
                if (from == v) s.second.emplace_back(ell, 0, cls[to], mult);
                if (to == v) s.second.emplace_back(ell, 1, cls[from], mult);
            }
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::map<Sig, u32> ids;
        std::vector<u32> n1c(n1), n2c(n2);
        for (u32 v = 0; v < n1; ++v) {
            Sig s = signature(g1, c1, v);
            auto it = ids.find(s);
            if (it == ids.end()) it = ids.emplace(s, static_cast<u32>(ids.size())).first;
            n1c[v] = it->second;
        }
        for (u32 v = 0; v < n2; ++v) {
            Sig s = signature(g2, c2, v);
            auto it = ids.find(s);
            if (it == ids.end()) it = ids.emplace(s, static_cast<u32>(ids.size())).first;
            n2c[v] = it->second;
        }
        if (n1c == c1 && n2c == c2) break;
        c1 = std::move(n1c);
        c2 = std::move(n2c);
    }
    cls2 = c2;
    return c1;
}

bool extend(const IsogenyGraph& g1, const IsogenyGraph& g2,
            const std::vector<u32>& c1, const std::vector<u32>& c2,
            std::vector<i64>& map12, std::vector<i64>& map21, u32 v) {
    size_t n = g1.size();
    if (v == n) return true;
    for (u32 w = 0; w < n; ++w) {
        if (map21[w] >= 0 || c2[w] != c1[v]) continue;
        bool ok = true;
        // consistency against already-mapped vertices, every color, both ways
        for (u32 u = 0; u < v && ok; ++u) {
            u32 wu = static_cast<u32>(map12[u]);
            for (unsigned ell : g1.degrees) {
                if (g1.mult(v, u, ell) != g2.mult(w, wu, ell) ||
                    g1.mult(u, v, ell) != g2.mult(wu, w, ell)) {
                    ok = false;
                    break;
                }
            }
        }
        for (unsigned ell : g1.degrees) {
            if (!ok) break;
            if (g1.mult(v, v, ell) != g2.mult(w, w, ell)) ok = false;
        }
        if (!ok) continue;
        map12[v] = w;
        map21[w] = v;
        if (extend(g1, g2, c1, c2, map12, map21, v + 1)) return true;
        map12[v] = -1;
        map21[w] = -1;
    }
    return false;
}

} // namespace

std::optional<std::vector<u32>> graphs_isomorphic(const IsogenyGraph& g1,
                                                  const IsogenyGraph& g2) {
    if (g1.degrees != g2.degrees)
        fail(Err::DegreeSetMismatch, "degree sets differ");
    if (g1.size() != g2.size()) return std::nullopt;
    std::vector<u32> c2;
    std::vector<u32> c1 = refine(g1, g2, c2);
    // class histograms must agree
    std::map<u32, int> h1, h2;
    for (u32 c : c1) h1[c]++;
    for (u32 c : c2) h2[c]++;
    if (h1 != h2) return std::nullopt;
    std::vector<i64> map12(g1.size(), -1), map21(g2.size(), -1);
    if (!extend(g1, g2, c1, c2, map12, map21, 0)) return std::nullopt;
    std::vector<u32> out(g1.size());
    for (size_t i = 0; i < g1.size(); ++i) out[i] = static_cast<u32>(map12[i]);
    return out;
}

namespace {

const char* color_for(unsigned ell) {
    switch (ell) {
        case 2: return "black";
        case 3: return "green";
        case 5: return "blue";
        case 7: return "red";
        case 11: return "darkgreen";
        case 13: return "purple";
        case 17: return "teal";
        case 19: return "olive";
        default: return "gray";
    }
}

} // namespace

std::string to_dot(const IsogenyGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    for (u32 i = 0; i < g.size(); ++i)
        out << "  v" << i << " [label=\"" << g.labels[i] << "\"];\n";
    for (unsigned ell : g.degrees) {
        for (u32 i = 0; i < g.size(); ++i) {
            // loops: pairs collapse to one undirected loop
            unsigned m = g.mult(i, i, ell);
            for (unsigned k = 0; k < m / 2; ++k)
                out << "  v" << i << " -> v" << i << " [color=" << color_for(ell)
                    << ", dir=none];\n";
            if (m % 2)
                out << "  v" << i << " -> v" << i << " [color=" << color_for(ell)
                    << "];\n";
            for (u32 k = i + 1; k < g.size(); ++k) {
                unsigned fwd = g.mult(i, k, ell), rev = g.mult(k, i, ell);
                unsigned und = std::min(fwd, rev);
                for (unsigned r = 0; r < und; ++r)
                    out << "  v" << i << " -> v" << k << " [color=" << color_for(ell)
                        << ", dir=none];\n";
                for (unsigned r = und; r < fwd; ++r)
                    out << "  v" << i << " -> v" << k << " [color=" << color_for(ell)
                        << "];\n";
                for (unsigned r = und; r < rev; ++r)
                    out << "  v" << k << " -> v" << i << " [color=" << color_for(ell)
                        << "];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace hasse
