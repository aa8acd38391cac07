#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "towers/json_io.hpp"

namespace towers {

struct IdentityOptions {
    int max_area = 12;     ///< brute-force area bound for oracle comparisons
    int max_pieces = 7;    ///< brute-force piece bound for the dimer and monomer checks
    std::size_t series_order = 200;
    unsigned threads = 0;
    /// Test hook: adds 1 to [t^4] M for S={2} before it is compared.
    bool corrupt_series = false;
};

struct IdentityCheck {
    std::string name;
    bool passed = true;
    std::string detail;
    Json counterexample;  ///< null when passed
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_passed() const;
    /// First failing check, or nullptr.
    const IdentityCheck* first_failure() const;
    Json to_json() const;
};

/// The configurations every cross-module identity is run over.
std::vector<PieceSet> identity_piece_sets();

IdentityReport verify_identities(const IdentityOptions& options = {});

}  // namespace towers
