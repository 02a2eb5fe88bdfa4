#pragma once

#include "fk3/poly.hpp"
#include "fk3/rational.hpp"

#include <cstddef>
#include <vector>

namespace fk3 {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

enum class SolutionKind { Unique, Family, Inconsistent };

const char* to_string(SolutionKind k);

// Solution set of A x = b.  For Family, every solution is
// particular + sum t_i kernel[i].
template <class S>
struct SolveResult {
    SolutionKind kind = SolutionKind::Inconsistent;
    std::size_t rank = 0;
    std::vector<S> particular;
    std::vector<RVector> kernel;
    std::vector<std::size_t> pivot_columns;
};

// Exact Gauss-Jordan elimination.  The matrix is m x n; rows may be shorter
// than n (missing entries are zero).
SolveResult<Rational> solve_linear(const RMatrix& a, const RVector& b, std::size_t ncols);
// Same elimination with polynomial right-hand sides; inconsistency means a
// zero row whose reduced right-hand side is a nonzero polynomial.
SolveResult<Poly> solve_linear(const RMatrix& a, const std::vector<Poly>& b, std::size_t ncols);

std::size_t matrix_rank(const RMatrix& a, std::size_t ncols);
std::vector<RVector> nullspace(const RMatrix& a, std::size_t ncols);

// Is v in the row space of a?
bool in_row_space(const RMatrix& a, const RVector& v, std::size_t ncols);

}  // namespace fk3
