// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "hasse.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/density.hpp"
#include "core/report.hpp"

using namespace hasse;

struct hasse_ctx {
    ModPolyStore store;
    explicit hasse_ctx(std::string dir) : store(std::move(dir)) {}
};

namespace {

thread_local std::string g_last_error;

hasse_status code_of(const Error& e) {
    switch (e.code()) {
        case Err::NotHasse:
        case Err::EqualInputs:
            return HASSE_E_NOT_HASSE;
        case Err::MissingFile:
        case Err::MalformedLine:
        case Err::NonMonic:
            return HASSE_E_IO;
        case Err::FieldTooLarge:
        case Err::Unsupported:
        case Err::UnknownDegree:
        case Err::BoundTooLarge:
        case Err::TableTooSmall:
        case Err::EmptySet:
            return HASSE_E_UNSUPPORTED;
        default:
            return HASSE_E_INVALID;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
hasse_status guarded(Fn&& fn) {
    try {
        fn();
        return HASSE_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return code_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HASSE_E_INTERNAL;
    }
}

std::string resolve_dir(const char* modpoly_dir) {
    if (modpoly_dir && *modpoly_dir) return modpoly_dir;
    const char* env = std::getenv("HASSE_MODPOLY_DIR");
    if (env && *env) return env;
    return "./data/modpoly";
}

std::set<unsigned> degree_set(const unsigned* degrees, size_t n) {
    std::set<unsigned> b;
    for (size_t i = 0; i < n; ++i) b.insert(degrees[i]);
    return b;
}

LineSink to_sink(hasse_line_cb cb, void* user) {
    return [cb, user](const std::string& line) {
        if (cb) cb(line.c_str(), line.size(), user);
    };
}

} // namespace

extern "C" {

hasse_status hasse_ctx_new(const char* modpoly_dir, hasse_ctx** out) {
    if (!out) return HASSE_E_INVALID;
    return guarded([&] { *out = new hasse_ctx(resolve_dir(modpoly_dir)); });
}

void hasse_ctx_free(hasse_ctx* ctx) { delete ctx; }

const char* hasse_last_error(void) { return g_last_error.c_str(); }

void hasse_string_free(char* s) { std::free(s); }

const char* hasse_version(void) { return "1.0.0"; }

hasse_status hasse_classify_json(hasse_ctx* ctx, uint64_t q1, uint64_t q2,
                                 int include_curves, unsigned jobs,
                                 char** json_out) {
    if (!ctx || !json_out) return HASSE_E_INVALID;
    return guarded([&] {
        *json_out = dup_string(classify_json(q1, q2, include_curves != 0, jobs));
    });
}

hasse_status hasse_graph_render(hasse_ctx* ctx, uint64_t q1, uint64_t q2,
                                const unsigned* degrees, size_t n_degrees,
                                int as_dot, int allow_ss, unsigned jobs,
                                char** out) {
    if (!ctx || !out) return HASSE_E_INVALID;
    return guarded([&] {
        PairGraphs pg = build_pair_graphs(q1, q2, degree_set(degrees, n_degrees),
                                          ctx->store, allow_ss != 0, jobs);
        *out = dup_string(as_dot ? graph_dot(pg) : graph_json(pg));
    });
}

hasse_status hasse_verify_iso(hasse_ctx* ctx, uint64_t q1, uint64_t q2,
                              const unsigned* degrees, size_t n_degrees,
                              int allow_ss, unsigned jobs, int* isomorphic_out,
                              char** json_out) {
    if (!ctx || !isomorphic_out) return HASSE_E_INVALID;
    return guarded([&] {
        VerifyResult res = verify_iso(q1, q2, degree_set(degrees, n_degrees),
                                      ctx->store, allow_ss != 0, jobs);
        *isomorphic_out = res.isomorphic ? 1 : 0;
        if (json_out) *json_out = dup_string(res.json);
    });
}

hasse_status hasse_search_empty(hasse_ctx* ctx, uint64_t max_q, unsigned jobs,
                                uint64_t* findings_out, hasse_line_cb cb,
                                void* user) {
    if (!ctx) return HASSE_E_INVALID;
    return guarded([&] {
        u64 n = search_empty_stream(max_q, jobs, to_sink(cb, user));
        if (findings_out) *findings_out = n;
    });
}

hasse_status hasse_andrica(hasse_ctx* ctx, uint64_t max_q,
                           int over_prime_powers, uint64_t* violations_out,
                           hasse_line_cb cb, void* user) {
    if (!ctx) return HASSE_E_INVALID;
    return guarded([&] {
        AndricaOutcome out =
            andrica_stream(max_q, over_prime_powers != 0, to_sink(cb, user));
        if (violations_out) *violations_out = out.violations;
    });
}

hasse_status hasse_partners(hasse_ctx* ctx, uint64_t max_p, int emit_counts,
                            unsigned jobs, uint64_t* exceptions_out,
                            hasse_line_cb cb, void* user) {
    if (!ctx) return HASSE_E_INVALID;
    return guarded([&] {
        u64 n = partners_stream(max_p, emit_counts != 0, jobs, to_sink(cb, user));
        if (exceptions_out) *exceptions_out = n;
    });
}

hasse_status hasse_partner_count(hasse_ctx* ctx, uint64_t p,
                                 uint64_t* count_out) {
    if (!ctx || !count_out) return HASSE_E_INVALID;
    return guarded([&] {
        SieveTable table = sieve(p + 2 * isqrt(p) + 4);
        *count_out = hasse::hasse_partner_count(p, table);
    });
}

hasse_status hasse_enumerate(hasse_ctx* ctx, uint64_t max_q,
                             const char* cell_filter, int odd_only,
                             unsigned jobs, hasse_line_cb cb, void* user) {
    if (!ctx) return HASSE_E_INVALID;
    return guarded([&] {
        enumerate_stream(max_q, cell_filter ? cell_filter : "", odd_only != 0,
                         jobs, to_sink(cb, user));
    });
}

} // extern "C"
