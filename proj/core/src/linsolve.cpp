#include "fk3/linsolve.hpp"

#include <stdexcept>

namespace fk3 {

const char* to_string(SolutionKind k) {
    switch (k) {
        case SolutionKind::Unique: return "unique";
        case SolutionKind::Family: return "family";
        case SolutionKind::Inconsistent: return "inconsistent";
    }
    return "?";
}

namespace {

template <class S>
bool rhs_zero(const S& s) {
    return is_zero(s);
}

template <class S>
SolveResult<S> eliminate(const RMatrix& a, const std::vector<S>& b, std::size_t n) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: row count mismatch");
    std::size_t m = a.size();
    RMatrix rows(m, RVector(n));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() > n) throw std::invalid_argument("solve_linear: row longer than column count");
        for (std::size_t j = 0; j < a[i].size(); ++j) rows[i][j] = a[i][j];
    }
    std::vector<S> rhs = b;

    SolveResult<S> res;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        Rational inv = 1 / rows[r][col];
        for (std::size_t j = col; j < n; ++j)
            if (sgn(rows[r][j]) != 0) rows[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || sgn(rows[i][col]) == 0) continue;
            Rational f = rows[i][col];
            for (std::size_t j = col; j < n; ++j)
                if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
            if (!rhs_zero(rhs[r])) {
                S t = rhs[r];
                t *= f;
                rhs[i] -= t;
            }
        }
        res.pivot_columns.push_back(col);
        ++r;
    }
    res.rank = r;
    for (std::size_t i = r; i < m; ++i) {
        if (!rhs_zero(rhs[i])) {
            res.kind = SolutionKind::Inconsistent;
            return res;
        }
    }
    res.particular.assign(n, S(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t k = 0; k < r; ++k) {
        res.particular[res.pivot_columns[k]] = rhs[k];
        is_pivot[res.pivot_columns[k]] = true;
    }
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RVector v(n);
        v[free] = 1;
        for (std::size_t k = 0; k < r; ++k) v[res.pivot_columns[k]] = -rows[k][free];
        res.kernel.push_back(std::move(v));
    }
    res.kind = res.kernel.empty() ? SolutionKind::Unique : SolutionKind::Family;
    return res;
}

}  // namespace

SolveResult<Rational> solve_linear(const RMatrix& a, const RVector& b, std::size_t ncols) {
    return eliminate<Rational>(a, b, ncols);
}

SolveResult<Poly> solve_linear(const RMatrix& a, const std::vector<Poly>& b, std::size_t ncols) {
    return eliminate<Poly>(a, b, ncols);
}

std::size_t matrix_rank(const RMatrix& a, std::size_t ncols) {
    return eliminate<Rational>(a, RVector(a.size()), ncols).rank;
}

std::vector<RVector> nullspace(const RMatrix& a, std::size_t ncols) {
    return eliminate<Rational>(a, RVector(a.size()), ncols).kernel;
}

bool in_row_space(const RMatrix& a, const RVector& v, std::size_t ncols) {
    RMatrix b = a;
    std::size_t r0 = matrix_rank(a, ncols);
    b.push_back(v);
    return matrix_rank(b, ncols) == r0;
}

}  // namespace fk3
