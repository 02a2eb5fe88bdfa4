#pragma once

#include "fk3/cleft.hpp"
#include "fk3/smash.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fk3 {

// One relation of the deformed presentation: computed value of a product
// in A_sigma, the expected shape, and the solved constant(s).
struct RelationCheck {
    std::string relation;   // "a0*a0", "a1*a0 + a2*a1 + a0*a2", ...
    std::string computed;   // element of A as text
    std::string expected;   // expected element as text
    bool ok = false;
    // Variant of a printed relation with a sign correction; does not count
    // towards DeformationReport::ok.
    bool corrected = false;
};

struct DeformationReport {
    // All printed relations hold.
    bool ok = true;
    // All relations hold once the corrected variants replace their printed
    // counterparts.
    bool corrected_ok = true;
    std::vector<RelationCheck> relations;
    // Copointed only: (alpha1, alpha2) solved from a0^2 as polynomials in c.
    std::optional<std::pair<Poly, Poly>> alpha;
    // Which stated correspondence matches: "alpha1=c0-c2, alpha2=c0-c1",
    // "alpha1=c0-c1, alpha2=c0-c2", "both", or "neither".
    std::string alpha_match;
};

// Computes a_i = x_i # 1 in A_sigma and the products
//   pointed:   a_i^2 = mu (1 - t^{2(2k+1)}), a1a0 + a2a1 + a0a2 = lambda (1 - s t^{2(2k+1)}),
//              a0a1 + a1a2 + a2a0 = lambda (1 - s^2 t^{2(2k+1)});
//   copointed: a_i^2 in the delta basis with (alpha1, alpha2) solved from a0^2,
//              both cyclic sums zero.  The printed a2^2 carries +alpha1 on
//              d(23) + d(132); the sign-corrected variant with -alpha1 is also
//              checked.
DeformationReport check_deformation_relations(const CleftParams& p, const Realization& r);

}  // namespace fk3
