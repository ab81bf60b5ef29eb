// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_MODPOLY_HPP
#define HASSEPAIRS_CORE_MODPOLY_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "core/field.hpp"

namespace hasse {

/// Symmetric coefficient table of the classical modular polynomial Phi_l,
/// kept as decimal strings and reduced per field on demand.
struct ModPolyTable {
    unsigned ell = 0;
    // c[i][j], 0 <= i,j <= ell+1, "0" when absent in the file
    std::vector<std::vector<std::string>> c;
};

class ModPolyStore {
  public:
    explicit ModPolyStore(std::string directory) : dir_(std::move(directory)) {}

    static constexpr unsigned kSupported[] = {2, 3, 5, 7, 11, 13, 17, 19};
    static bool supported(unsigned ell);

    const ModPolyTable& table(unsigned ell) const;
    const std::string& directory() const { return dir_; }

    /// Coefficient matrix of Phi_l reduced mod p, cached per (l, p).
    const std::vector<std::vector<u64>>& reduced(unsigned ell, u64 p) const;

    /// Phi_l(j, Y) over the field of j, as dense coefficients in Y.
    std::vector<Fe> evaluated_at(unsigned ell, const Fe& j) const;

  private:
    std::string dir_;
    mutable std::mutex mu_;
    mutable std::map<unsigned, ModPolyTable> tables_;
    mutable std::map<std::pair<unsigned, u64>, std::vector<std::vector<u64>>> reduced_;
};

/// Parse phi_<l>.txt from `directory`; see the repo docs for the format.
ModPolyTable load_modpoly(unsigned ell, const std::string& directory);

} // namespace hasse

#endif
