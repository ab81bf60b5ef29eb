// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// Command-line front end; talks to the library only through the C API.
// Exit codes: 0 success / property verified, 1 negative mathematical
// finding (non-isomorphic, violation found), 2 usage or environment error.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hasse.h"

namespace {

void print_line(const char* line, size_t len, void* /*user*/) {
    std::fwrite(line, 1, len, stdout);
    std::fputc('\n', stdout);
}

int usage_error(const std::string& what) {
    std::fprintf(stderr, "{\"error\":\"%s\"}\n", what.c_str());
    return 2;
}

int report_status(hasse_status st) {
    if (st == HASSE_OK) return 0;
    return usage_error(hasse_last_error());
}

struct Timing {
    bool enabled = false;
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    ~Timing() {
        if (!enabled) return;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::fprintf(stderr, "wall_ms=%lld\n", static_cast<long long>(ms));
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hasse pairs of prime powers: classification, curve sets, "
                 "isogeny graphs, density scans"};
    app.require_subcommand(1);

    std::string modpoly_dir;
    unsigned jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    bool timing = false;
    app.add_option("--modpoly-dir", modpoly_dir,
                   "directory with phi_<l>.txt tables (default: "
                   "$HASSE_MODPOLY_DIR, then ./data/modpoly)");
    app.add_option("--jobs", jobs, "worker threads for sweeps");
    app.add_flag("--timing", timing, "print wall time to stderr");

    // classify
    uint64_t q1 = 0, q2 = 0;
    bool curves = false;
    auto* c_classify = app.add_subcommand("classify", "classify one pair");
    c_classify->add_option("q1", q1)->required();
    c_classify->add_option("q2", q2)->required();
    c_classify->add_flag("--curves", curves, "include per-side j lists");

    // graph
    std::vector<unsigned> degrees;
    std::string format = "dot";
    bool allow_ss = false;
    auto* c_graph = app.add_subcommand("graph", "emit both B-isogeny graphs");
    c_graph->add_option("q1", q1)->required();
    c_graph->add_option("q2", q2)->required();
    c_graph->add_option("--degrees", degrees, "isogeny degrees (default set)")
        ->delimiter(',');
    c_graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    c_graph->add_flag("--allow-ss", allow_ss, "build supersingular fixtures");

    // verify-iso
    auto* c_verify = app.add_subcommand("verify-iso",
                                        "test the two graphs for isomorphism");
    c_verify->add_option("q1", q1)->required();
    c_verify->add_option("q2", q2)->required();
    c_verify->add_option("--degrees", degrees)->delimiter(',');
    c_verify->add_flag("--allow-ss", allow_ss);

    // sweeps
    uint64_t max_q = 10000;
    auto* c_empty = app.add_subcommand("search-empty",
                                       "pairs with both sides empty");
    c_empty->add_option("--max", max_q);

    std::string over = "prime-powers";
    auto* c_andrica = app.add_subcommand("andrica", "square-root gap scan");
    c_andrica->add_option("--max", max_q);
    c_andrica->add_option("--over", over)
        ->check(CLI::IsMember({"primes", "prime-powers"}));

    uint64_t single_p = 0;
    bool counts = false;
    auto* c_partners = app.add_subcommand("partners",
                                          "prime Hasse-partner counts vs the "
                                          "analytic threshold");
    c_partners->add_option("--max", max_q);
    c_partners->add_option("--p", single_p, "report a single prime's count");
    c_partners->add_flag("--counts", counts, "emit every prime's count");

    std::string filter;
    bool odd_only = false;
    auto* c_enum = app.add_subcommand("enumerate", "stream classified pairs");
    c_enum->add_option("--max", max_q);
    c_enum->add_option("--filter", filter,
                       "table cell, e.g. ordinary-ordinary or "
                       "odd:supersingular-ordinary");
    c_enum->add_flag("--odd-only", odd_only);

    CLI11_PARSE(app, argc, argv);

    hasse_ctx* ctx = nullptr;
    hasse_status st = hasse_ctx_new(
        modpoly_dir.empty() ? nullptr : modpoly_dir.c_str(), &ctx);
    if (st != HASSE_OK) return usage_error(hasse_last_error());
    Timing t;
    t.enabled = timing;

    int rc = 0;
    if (c_classify->parsed()) {
        char* json = nullptr;
        st = hasse_classify_json(ctx, q1, q2, curves, jobs, &json);
        if (st == HASSE_OK) {
            std::printf("%s\n", json);
            hasse_string_free(json);
        }
        rc = report_status(st);
    } else if (c_graph->parsed()) {
        char* out = nullptr;
        st = hasse_graph_render(ctx, q1, q2,
                                degrees.empty() ? nullptr : degrees.data(),
                                degrees.size(), format == "dot", allow_ss, jobs,
                                &out);
        if (st == HASSE_OK) {
            std::fputs(out, stdout);
            hasse_string_free(out);
            rc = 0;
        } else if (st == HASSE_E_UNSUPPORTED) {
            std::fprintf(stderr, "{\"error\":\"%s\"}\n", hasse_last_error());
            rc = 1;
        } else {
            rc = report_status(st);
        }
    } else if (c_verify->parsed()) {
        int iso = 0;
        char* json = nullptr;
        st = hasse_verify_iso(ctx, q1, q2,
                              degrees.empty() ? nullptr : degrees.data(),
                              degrees.size(), allow_ss, jobs, &iso, &json);
        if (st == HASSE_OK) {
            std::printf("%s\n", json);
            hasse_string_free(json);
            rc = iso ? 0 : 1;
        } else {
            rc = report_status(st);
        }
    } else if (c_empty->parsed()) {
        uint64_t findings = 0;
        st = hasse_search_empty(ctx, max_q, jobs, &findings, print_line, nullptr);
        rc = st == HASSE_OK ? 0 : report_status(st);
    } else if (c_andrica->parsed()) {
        uint64_t violations = 0;
        st = hasse_andrica(ctx, max_q, over == "prime-powers", &violations,
                           print_line, nullptr);
        rc = st == HASSE_OK ? (violations ? 1 : 0) : report_status(st);
    } else if (c_partners->parsed()) {
        if (single_p) {
            uint64_t count = 0;
            st = hasse_partner_count(ctx, single_p, &count);
            if (st == HASSE_OK)
                std::printf("{\"p\":%llu,\"count\":%llu}\n",
                            static_cast<unsigned long long>(single_p),
                            static_cast<unsigned long long>(count));
            rc = report_status(st);
        } else {
            uint64_t exceptions = 0;
            st = hasse_partners(ctx, max_q, counts, jobs, &exceptions,
                                print_line, nullptr);
            rc = st == HASSE_OK ? (exceptions ? 1 : 0) : report_status(st);
        }
    } else if (c_enum->parsed()) {
        st = hasse_enumerate(ctx, max_q, filter.empty() ? nullptr : filter.c_str(),
                             odd_only, jobs, print_line, nullptr);
        rc = st == HASSE_OK ? 0 : report_status(st);
    }

    hasse_ctx_free(ctx);
    return rc;
}
