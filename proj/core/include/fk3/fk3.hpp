#pragma once

#include "fk3/algebra.hpp"

namespace fk3 {

// x_i^2 -> 0, x1x2 -> -x0x1 - x2x0, x2x1 -> -x1x0 - x0x2, together with the
// cubic consequences x0x2x0 -> x2x0x2, x1x0x1 -> x0x1x0, x1x0x2 -> x2x0x1
// (braid-type relations of the quadratic ones) so that the irreducible words
// are exactly the 12 basis words.
RewriteSystem fk3_rewrite_system();

// Frozen structure constants (integer coefficients, no parameters).
const AlgebraTable& fk3_table();

Element fk3_multiply(const Element& a, const Element& b);

// Coefficient of the basis word 1.
Poly counit(const Element& a);

// Quadratic defining relations as elements of the free algebra, for checks:
// x_i x_i, x0x1 + x1x2 + x2x0, x1x0 + x2x1 + x0x2.
std::vector<LinComb> fk3_quadratic_relations();

}  // namespace fk3
