#pragma once

#include "fk3/hochschild.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fk3 {

// Triples (j, r, i) where the displayed index formula j - r i - k + 1 (mod 3)
// differs from the index obtained by conjugating s^i t^{2k+1} by s^j t^r.
struct IndexFormulaDisagreement {
    int j = 0, r = 0, i = 0;
    int conjugation = 0;
    int displayed = 0;
};
struct IndexFormulaReport {
    int ell = 1, k = 0;
    std::size_t checked = 0;
    std::vector<IndexFormulaDisagreement> disagreements;
};
IndexFormulaReport index_formula_diagnostic(int ell, int k);

// delta f for a stated witness f compared with its target cocycle.
struct WitnessCheck {
    std::string name;  // "f2 -> xi2", "f3 -> xi3"
    CoboundarySign sign = CoboundarySign::Plus;
    bool equals_target = false;
    std::vector<std::string> differences;  // "(a, b): delta f vs target"
};

// B^2 membership decided by exact linear solve.
struct MembershipCheck {
    std::string name;  // "xi2", "xi3"
    CoboundarySign sign = CoboundarySign::Plus;
    CoboundaryVerdict verdict;
    // The witness, when present, reproduces the target exactly.
    bool witness_verified = false;
};

struct DiagnosticsReport {
    std::vector<IndexFormulaReport> index_formula;
    // (alpha1, alpha2) as polynomials in c0, c1, c2 and which stated map matches.
    std::optional<std::pair<Poly, Poly>> alpha;
    std::string alpha_match;
    std::vector<WitnessCheck> witnesses;
    std::vector<MembershipCheck> membership;
    std::uint64_t seed = 0;
    std::size_t random_trials = 0;
    std::size_t random_cocycles = 0;  // trials whose delta f passed is_cocycle under both signs

    // Every random delta f is a cocycle, every witness is verified, an equal
    // stated witness implies membership, and exactly one alpha map matches.
    bool consistent() const;
};

// f2 = -1 on x2x0, x0x2, x1x0, x0x1; f3 = -1 on x2x0x1x0; zero elsewhere.
Functional stated_f2();
Functional stated_f3();

// Seeded functional with small random rational values and f(1) = 0.
Functional random_functional(std::mt19937_64& rng);

DiagnosticsReport run_diagnostics(std::uint64_t seed = 12345, std::size_t trials = 50);
std::string render_diagnostics(const DiagnosticsReport& d);

}  // namespace fk3
