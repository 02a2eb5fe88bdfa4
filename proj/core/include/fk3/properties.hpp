#pragma once

#include "fk3/cleft.hpp"
#include "fk3/smash.hpp"

#include <string>
#include <vector>

namespace fk3 {

struct PropertyCheck {
    std::string name;
    bool ok = true;
    std::size_t checked = 0;
    std::string detail;  // first counterexample when ok is false
};

// Associativity of a 12-dimensional table on all basis triples.
PropertyCheck check_associativity(const std::string& name, const AlgebraTable& t);

// dim of the degree-n part of the free algebra modulo the quadratic FK3
// relations, n = 0..max_degree, by exact rank of the relation span.
std::vector<std::size_t> hilbert_series(int max_degree = 5);

// Braided Hopf structure of FK3 for one realization.
PropertyCheck check_braid_equation(const Realization& r);
PropertyCheck check_coassociativity(const Realization& r);
PropertyCheck check_counit(const Realization& r);
PropertyCheck check_braided_multiplicativity(const Realization& r);
// h.(ab) = (h1.a)(h2.b) for every basis element h of H.
PropertyCheck check_module_algebra(const Realization& r);

// Bosonization: associativity, coassociativity, Delta multiplicative, unit.
PropertyCheck check_smash_associativity(const SmashAlgebra& a);
PropertyCheck check_smash_coassociativity(const SmashAlgebra& a);
PropertyCheck check_smash_bialgebra(const SmashAlgebra& a);

// A_sigma at numeric parameters: associativity on all basis triples and
// 1 # 1_H as unit.
PropertyCheck check_deformed_associativity(const SmashAlgebra& a, const SmashForm<Rational>& sigma,
                                           const SmashForm<Rational>& sigma_inv, int workers = 1);

// eta^{*5} = 0 for the symbolic invariant cocycle.
PropertyCheck check_nilpotent_exponent(const Realization& r);

}  // namespace fk3
