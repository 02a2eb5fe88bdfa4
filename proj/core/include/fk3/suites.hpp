#pragma once

#include "fk3/cleft.hpp"
#include "fk3/forms.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fk3 {

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> lines;
    bool ok() const;
    void add(std::string name, bool ok, std::string detail = {});
};

struct SuiteOptions {
    int ell = 1;
    int k = 0;
    // Only the symbolic checks; numeric sweeps are skipped.
    bool symbolic = false;
    // Numeric point for the parameter-dependent checks; seeded samples otherwise.
    std::optional<CleftParams> params;
    std::uint64_t seed = 1;
    std::size_t samples = 3;
    int workers = 1;
    // Test hook: corrupt one FK3 structure constant before the bialgebra
    // checks, which must then fail.
    bool mutate = false;
};

// theorem-a, theorem-b, sections, bialgebra, exponentials, cohomology.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

// Seeded rational points with small numerators and denominators.
std::vector<std::pair<Rational, Rational>> sample_pointed(std::uint64_t seed, std::size_t n);
std::vector<std::array<Rational, 3>> sample_copointed(std::uint64_t seed, std::size_t n);

// eta_lambda = lb (xi0 + xi2) + 2 lb^2 xi3 with lb = lambda/3.
BiFunctional eta_lambda(const Poly& lambda);
// sum of c_i * form_i.
BiFunctional combine(const std::vector<std::pair<Poly, BiFunctional>>& terms);

std::string render_suite(const SuiteReport& r);

}  // namespace fk3
