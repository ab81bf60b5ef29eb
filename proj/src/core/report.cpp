// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "core/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <json.hpp>

#include "core/density.hpp"

namespace hasse {

using ojson = nlohmann::ordered_json;

namespace {

Field field_of(const PrimePower& pp) { return make_field(pp.p, pp.a); }

ojson side_json(const PrimePower& pp, Status st, u64 target, bool with_curves,
                unsigned jobs) {
    ojson side;
    side["status"] = status_name(st);
    if (!with_curves) return side;
    Field f = field_of(pp);
    SetEnumeration en = enumerate_set(f, target, jobs);
    side["exact"] = en.exact;
    ojson js = ojson::array();
    for (const Fe& j : en.j_set) js.push_back(fe_to_string(j));
    side["js"] = js;
    if (en.exact) side["count"] = en.classes.size();
    return side;
}

ojson record_json(const PairRecord& rec, bool with_curves, unsigned jobs) {
    ojson o;
    o["q1"] = rec.q1.q;
    o["q2"] = rec.q2.q;
    o["p1"] = rec.q1.p;
    o["a1"] = rec.q1.a;
    o["p2"] = rec.q2.p;
    o["a2"] = rec.q2.a;
    o["t1"] = rec.t1;
    o["t2"] = rec.t2;
    o["delta"] = rec.delta;
    o["conductor"] = rec.conductor_f;
    o["fundamental_discriminant"] = rec.fundamental_D;
    o["e1"] = side_json(rec.q1, rec.e1, rec.q2.q, with_curves, jobs);
    o["e2"] = side_json(rec.q2, rec.e2, rec.q1.q, with_curves, jobs);
    o["table_cell"] = table_cell(rec);
    ojson splits;
    splits["p1"] = split_name(rec.split1);
    splits["p2"] = split_name(rec.split2);
    o["splits"] = splits;
    return o;
}

/// ordered, bounded-memory parallel map over an index range
void parallel_lines(size_t n, unsigned jobs,
                    const std::function<std::string(size_t)>& make,
                    const LineSink& sink) {
    if (jobs <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) sink(make(i));
        return;
    }
    const size_t batch = 4096;
    for (size_t start = 0; start < n; start += batch) {
        size_t end = std::min(n, start + batch);
        std::vector<std::string> out(end - start);
        std::vector<std::thread> threads;
        std::atomic<size_t> next{start};
        for (unsigned w = 0; w < jobs; ++w) {
            threads.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= end) return;
                    out[i - start] = make(i);
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const std::string& s : out) sink(s);
    }
}

} // namespace

std::set<unsigned> default_degrees(const PairRecord& rec) {
    std::set<unsigned> b{2, 3, 5, 7, 11, 13};
    for (u64 p : {rec.q1.p, rec.q2.p})
        if (ModPolyStore::supported(static_cast<unsigned>(p)))
            b.insert(static_cast<unsigned>(p));
    return b;
}

std::string classify_json(u64 q1, u64 q2, bool with_curves, unsigned jobs) {
    PairRecord rec = classify_pair(require_prime_power(q1), require_prime_power(q2));
    return record_json(rec, with_curves, jobs).dump();
}

PairGraphs build_pair_graphs(u64 q1, u64 q2, std::set<unsigned> degrees,
                             const ModPolyStore& store, bool allow_ss,
                             unsigned jobs) {
    PairGraphs pg;
    pg.rec = classify_pair(require_prime_power(q1), require_prime_power(q2));
    if (degrees.empty()) degrees = default_degrees(pg.rec);
    if (pg.rec.e1 == Status::Empty || pg.rec.e2 == Status::Empty)
        fail(Err::EmptySet, "one side of the pair is empty");
    bool any_ss = pg.rec.e1 == Status::Supersingular ||
                  pg.rec.e2 == Status::Supersingular;
    if (any_ss && !allow_ss)
        fail(Err::Unsupported, "supersingular side; pass the ss flag to build it");
    auto side = [&](const PrimePower& pp, u64 target, Status st) {
        Field f = field_of(pp);
        SetEnumeration en = enumerate_set(f, target, jobs);
        if (!en.exact)
            fail(Err::Unsupported, "supersingular enumeration cap exceeded");
        std::set<unsigned> b = degrees;
        if (st == Status::Supersingular) {
            // only the Frobenius color exists on a supersingular side
            for (unsigned ell : degrees)
                if (ell != pp.p)
                    fail(Err::Unsupported,
                         "degree " + std::to_string(ell) +
                             " unavailable on the supersingular side");
        }
        return build_graph(en.classes, b, store, st == Status::Supersingular);
    };
    pg.g1 = side(pg.rec.q1, pg.rec.q2.q, pg.rec.e1);
    pg.g2 = side(pg.rec.q2, pg.rec.q1.q, pg.rec.e2);
    return pg;
}

namespace {

ojson one_graph_json(const IsogenyGraph& g) {
    ojson o;
    ojson fld;
    fld["p"] = g.field->p;
    fld["a"] = g.field->a;
    ojson mod = ojson::array();
    for (u64 c : g.field->modulus) mod.push_back(c);
    fld["modulus"] = mod;
    o["field"] = fld;
    ojson verts = ojson::array();
    for (const std::string& l : g.labels) verts.push_back(l);
    o["vertices"] = verts;
    std::vector<std::tuple<unsigned, u32, u32, unsigned>> sorted;
    for (const auto& [key, mult] : g.edges) {
        auto [from, to, ell] = key;
        sorted.emplace_back(ell, from, to, mult);
    }
    std::sort(sorted.begin(), sorted.end());
    ojson edges = ojson::array();
    for (const auto& [ell, from, to, mult] : sorted) {
        ojson e;
        e["from"] = from;
        e["to"] = to;
        e["degree"] = ell;
        e["mult"] = mult;
        edges.push_back(e);
    }
    o["edges"] = edges;
    return o;
}

} // namespace

std::string graph_json(const PairGraphs& pg) {
    ojson o;
    o["q1"] = pg.rec.q1.q;
    o["q2"] = pg.rec.q2.q;
    ojson degs = ojson::array();
    for (unsigned d : pg.g1.degrees) degs.push_back(d);
    o["degrees"] = degs;
    o["e1"] = one_graph_json(pg.g1);
    o["e2"] = one_graph_json(pg.g2);
    return o.dump();
}

std::string graph_dot(const PairGraphs& pg) {
    std::string name1 = "E1_" + std::to_string(pg.rec.q1.q);
    std::string name2 = "E2_" + std::to_string(pg.rec.q2.q);
    return to_dot(pg.g1, name1) + to_dot(pg.g2, name2);
}

VerifyResult verify_iso(u64 q1, u64 q2, std::set<unsigned> degrees,
                        const ModPolyStore& store, bool allow_ss, unsigned jobs) {
    PairGraphs pg = build_pair_graphs(q1, q2, std::move(degrees), store,
                                      allow_ss, jobs);
    VerifyResult res;
    ojson o;
    o["q1"] = pg.rec.q1.q;
    o["q2"] = pg.rec.q2.q;
    ojson degs = ojson::array();
    for (unsigned d : pg.g1.degrees) degs.push_back(d);
    o["degrees"] = degs;
    auto bij = graphs_isomorphic(pg.g1, pg.g2);
    res.isomorphic = bij.has_value();
    o["isomorphic"] = res.isomorphic;
    if (bij) {
        ojson pairs = ojson::array();
        for (size_t i = 0; i < bij->size(); ++i) {
            ojson m;
            m["e1"] = pg.g1.labels[i];
            m["e2"] = pg.g2.labels[(*bij)[i]];
            pairs.push_back(m);
        }
        o["bijection"] = pairs;
    } else {
        o["counterexample"] = "no multiplicity-preserving vertex bijection";
        ojson sizes;
        sizes["e1_vertices"] = pg.g1.size();
        sizes["e2_vertices"] = pg.g2.size();
        o["detail"] = sizes;
    }
    res.json = o.dump();
    return res;
}

u64 search_empty_stream(u64 max_q, unsigned jobs, const LineSink& sink) {
    std::vector<std::pair<PrimePower, PrimePower>> pairs;
    enumerate_hasse_pairs(max_q, false,
                          [&](const PrimePower& a, const PrimePower& b) {
                              pairs.emplace_back(a, b);
                          });
    u64 findings = 0;
    parallel_lines(
        pairs.size(), jobs,
        [&](size_t i) -> std::string {
            PairRecord rec = classify_pair(pairs[i].first, pairs[i].second);
            if (rec.e1 != Status::Empty || rec.e2 != Status::Empty) return "";
            ojson o;
            o["type"] = "empty_pair";
            o["q1"] = rec.q1.q;
            o["q2"] = rec.q2.q;
            o["t1"] = rec.t1;
            o["t2"] = rec.t2;
            o["delta"] = rec.delta;
            return o.dump();
        },
        [&](const std::string& s) {
            if (!s.empty()) {
                sink(s);
                ++findings;
            }
        });
    ojson trailer;
    trailer["type"] = "summary";
    trailer["max"] = max_q;
    trailer["pairs_scanned"] = pairs.size();
    trailer["findings"] = findings;
    sink(trailer.dump());
    return findings;
}

AndricaOutcome andrica_stream(u64 max_q, bool over_prime_powers,
                              const LineSink& sink) {
    SieveTable table = sieve(max_q);
    AndricaReport rep = andrica_scan(
        table, over_prime_powers ? ScanDomain::PrimePowers : ScanDomain::Primes);
    for (auto [q, qq] : rep.violations) {
        ojson o;
        o["type"] = "violation";
        o["q"] = q;
        o["q_next"] = qq;
        sink(o.dump());
    }
    for (auto [q, qq] : rep.equalities) {
        ojson o;
        o["type"] = "equality";
        o["q"] = q;
        o["q_next"] = qq;
        sink(o.dump());
    }
    if (over_prime_powers) {
        for (auto [lo, hi] : sqrt_gap_one_pairs(table)) {
            ojson o;
            o["type"] = "sqrt_gap_one_pair";
            o["q1"] = lo;
            o["q2"] = hi;
            sink(o.dump());
        }
    }
    ojson trailer;
    trailer["type"] = "summary";
    trailer["domain"] = over_prime_powers ? "prime-powers" : "primes";
    trailer["max"] = max_q;
    trailer["gaps_checked"] = rep.checked;
    trailer["violations"] = rep.violations.size();
    trailer["equalities"] = rep.equalities.size();
    sink(trailer.dump());
    return AndricaOutcome{rep.violations.size(), rep.equalities.size()};
}

u64 partners_stream(u64 max_p, bool emit_counts, unsigned jobs,
                    const LineSink& sink) {
    SieveTable table = sieve(max_p + 2 * isqrt(max_p) + 4);
    std::vector<u64> primes;
    for (u64 p : table.primes) {
        if (p > max_p) break;
        primes.push_back(p);
    }
    u64 exceptions = 0;
    parallel_lines(
        primes.size(), jobs,
        [&](size_t i) -> std::string {
            u64 p = primes[i];
            u64 count = hasse_partner_count(p, table);
            double thr = 0.5 * std::sqrt(static_cast<double>(p)) /
                         std::log(static_cast<double>(p));
            bool exception = static_cast<double>(count) < thr;
            if (!emit_counts && !exception) return "";
            ojson o;
            o["type"] = exception ? "exception" : "count";
            o["p"] = p;
            o["count"] = count;
            o["threshold"] = thr;
            return o.dump();
        },
        [&](const std::string& s) {
            if (s.empty()) return;
            sink(s);
            if (s.find("\"exception\"") != std::string::npos) ++exceptions;
        });
    ojson trailer;
    trailer["type"] = "summary";
    trailer["max"] = max_p;
    trailer["primes_checked"] = primes.size();
    trailer["exceptions"] = exceptions;
    sink(trailer.dump());
    return exceptions;
}

void enumerate_stream(u64 max_q, const std::string& cell_filter, bool odd_only,
                      unsigned jobs, const LineSink& sink) {
    std::vector<std::pair<PrimePower, PrimePower>> pairs;
    enumerate_hasse_pairs(max_q, odd_only,
                          [&](const PrimePower& a, const PrimePower& b) {
                              pairs.emplace_back(a, b);
                          });
    u64 emitted = 0;
    parallel_lines(
        pairs.size(), jobs,
        [&](size_t i) -> std::string {
            PairRecord rec = classify_pair(pairs[i].first, pairs[i].second);
            if (!cell_filter.empty()) {
                // filter matches the cell with or without the table prefix
                std::string cell = table_cell(rec);
                std::string bare = cell.substr(cell.find(':') + 1);
                if (cell != cell_filter && bare != cell_filter) return "";
            }
            return record_json(rec, false, 1).dump();
        },
        [&](const std::string& s) {
            if (!s.empty()) {
                sink(s);
                ++emitted;
            }
        });
    ojson trailer;
    trailer["type"] = "summary";
    trailer["max"] = max_q;
    trailer["pairs_scanned"] = pairs.size();
    trailer["emitted"] = emitted;
    sink(trailer.dump());
}

} // namespace hasse
