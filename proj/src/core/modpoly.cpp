// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "core/modpoly.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace hasse {

constexpr unsigned ModPolyStore::kSupported[];

bool ModPolyStore::supported(unsigned ell) {
    for (unsigned v : kSupported)
        if (v == ell) return true;
    return false;
}

ModPolyTable load_modpoly(unsigned ell, const std::string& directory) {
    if (!ModPolyStore::supported(ell))
        fail(Err::UnknownDegree, "no table for degree " + std::to_string(ell));
    std::string path = directory + "/phi_" + std::to_string(ell) + ".txt";
    std::ifstream in(path);
    if (!in) fail(Err::MissingFile, "cannot open " + path);
    unsigned deg = ell + 1;
    ModPolyTable t;
    t.ell = ell;
    t.c.assign(deg + 1, std::vector<std::string>(deg + 1, "0"));
    std::string line;
    unsigned lineno = 0;
    auto malformed = [&](const std::string& why) {
        fail(Err::MalformedLine, path + ":" + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ss(line);
        long long i = -1, j = -1;
        std::string coeff;
        if (!(ss >> i >> j >> coeff)) malformed("expected 'i j c'");
        std::string rest;
        if (ss >> rest) malformed("trailing tokens");
        if (i < 0 || j < 0 || j > i || static_cast<unsigned>(i) > deg)
            malformed("indices need 0 <= j <= i <= l+1");
        for (size_t k = 0; k < coeff.size(); ++k) {
            char ch = coeff[k];
            if (!((ch >= '0' && ch <= '9') || (k == 0 && (ch == '-' || ch == '+'))))
                malformed("coefficient is not a decimal integer");
        }
        t.c[i][j] = coeff;
        t.c[j][i] = coeff;
    }
    if (t.c[deg][0] != "1") fail(Err::NonMonic, path + ": missing leading '" +
                                                    std::to_string(deg) + " 0 1'");
    return t;
}

const ModPolyTable& ModPolyStore::table(unsigned ell) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(ell);
    if (it == tables_.end())
        it = tables_.emplace(ell, load_modpoly(ell, dir_)).first;
    return it->second;
}

const std::vector<std::vector<u64>>& ModPolyStore::reduced(unsigned ell,
                                                           u64 p) const {
    const ModPolyTable& t = table(ell);
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(ell, p);
    auto it = reduced_.find(key);
    if (it == reduced_.end()) {
        unsigned deg = ell + 1;
        std::vector<std::vector<u64>> red(deg + 1, std::vector<u64>(deg + 1, 0));
        for (unsigned i = 0; i <= deg; ++i)
            for (unsigned j = 0; j <= deg; ++j)
                red[i][j] = decimal_mod(t.c[i][j], p);
        it = reduced_.emplace(key, std::move(red)).first;
    }
    return it->second;
}

std::vector<Fe> ModPolyStore::evaluated_at(unsigned ell, const Fe& j) const {
    const auto& red = reduced(ell, j.f->p);
    unsigned deg = ell + 1;
    // column sums via Horner in j: coeff_k = sum_i red[i][k] j^i
    std::vector<Fe> out;
    out.reserve(deg + 1);
    for (unsigned k = 0; k <= deg; ++k) {
        Fe acc{j.f, std::vector<u64>(j.f->a, 0)};
        for (unsigned i = deg + 1; i-- > 0;) {
            acc = fe_mul(acc, j);
            Fe term{j.f, std::vector<u64>(j.f->a, 0)};
            term.c[0] = red[i][k];
            acc = fe_add(acc, term);
        }
        out.push_back(acc);
    }
    return out;
}

} // namespace hasse
