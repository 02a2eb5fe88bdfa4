#include "fk3/cleft.hpp"
#include "fk3/forms.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fk3;
using fk3::testing::load_table_fixture;
using fk3::testing::pointed_aliases;

namespace {

BiFunctional pointed_fixture() {
    return load_table_fixture("pointed_sigma_tables.txt", pointed_context(), pointed_aliases(), Poly(1));
}

BiFunctional copointed_fixture() {
    return load_table_fixture("copointed_sigma_tables.txt", copointed_context(), {}, Poly(1));
}

}  // namespace

TEST_CASE("cleft relations") {
    const CleftParams p = CleftParams::pointed_symbolic();
    const CleftObject e(p, Realization::pointed());
    const Poly mu = p.mu, lb = p.lambda_bar();
    // y_i^2 = mu and the cyclic sums are lambda-multiples of 1.
    for (int i = 0; i < 3; ++i) CHECK(e.word({i, i}) == Element::unit() * mu);
    CHECK(e.word({0, 1}) + e.word({1, 2}) + e.word({2, 0}) == Element::unit() * p.lambda);
    CHECK(e.word({1, 0}) + e.word({2, 1}) + e.word({0, 2}) == Element::unit() * p.lambda);
    CHECK(lb * Rational(3) == p.lambda);

    const CleftParams c = CleftParams::copointed_symbolic();
    const CleftObject ec(c, Realization::copointed());
    for (int i = 0; i < 3; ++i) CHECK(ec.word({i, i}) == Element::unit() * c.c[i]);
    CHECK((ec.word({0, 1}) + ec.word({1, 2}) + ec.word({2, 0})).is_zero());
}

TEST_CASE("sections are colinear, invertible and H-linear") {
    for (const CleftParams& p : {CleftParams::pointed_symbolic(), CleftParams::copointed_symbolic()}) {
        const CleftObject e(p, realization_for(p));
        const SectionReport rep = verify_section(e);
        CAPTURE(p.describe());
        CHECK(rep.colinear);
        CHECK(rep.convolution_inverse);
        CHECK(rep.h_linear);
        CHECK(rep.failures.empty());
    }
    const CleftParams p = CleftParams::pointed_symbolic();
    for (int ell : {1, 2})
        for (int k = 0; k < ell; ++k) CHECK(verify_section(CleftObject(p, realization_for(p, ell, k))).ok());
}

TEST_CASE("a corrupted section is rejected") {
    const CleftParams p = CleftParams::copointed_symbolic();
    CleftObject e(p, realization_for(p));
    e.set_gamma(kTop, e.gamma(kTop) * Poly(2));
    CHECK_FALSE(verify_section(e).ok());
}

TEST_CASE("pointed cocycle matches the transcribed tables") {
    const CleftParams p = CleftParams::pointed_symbolic();
    const BiFunctional expected = pointed_fixture();
    for (int ell : {1, 2})
        for (int k = 0; k < ell; ++k) {
            const BiFunctional sigma = sigma_from_section(CleftObject(p, realization_for(p, ell, k)));
            CHECK_MESSAGE(sigma == expected, differences(sigma, expected).front());
        }
    const BiFunctional sigma = sigma_from_section(CleftObject(p, realization_for(p)));
    const Poly l = p.lambda, m = p.mu, lb = p.lambda_bar();
    const int w = parse_basis_name("x0x1x0");
    CHECK(sigma.at(w, w) == m * m * m + lb * lb * lb * Rational(2) - lb * lb * m * Rational(3));
    CHECK(is_normalized(sigma));
    (void)l;
}

TEST_CASE("copointed cocycle matches the transcribed tables") {
    const CleftParams p = CleftParams::copointed_symbolic();
    const BiFunctional sigma = sigma_from_section(CleftObject(p, realization_for(p)));
    const BiFunctional expected = copointed_fixture();
    CHECK_MESSAGE(sigma == expected, differences(sigma, expected).front());
    CHECK(sigma.at(kTop, kTop) == -(p.c[1] * p.c[0] * p.c[0] * p.c[2]));
    CHECK(is_normalized(sigma));
}

TEST_CASE("decomposition rebuilds the cocycle from its degree-one rows") {
    for (const CleftParams& p : {CleftParams::pointed_symbolic(), CleftParams::copointed_symbolic()}) {
        const CleftObject e(p, realization_for(p));
        const BiFunctional sigma = sigma_from_section(e);
        BiFunctional seed;
        seed.at(0, 0) = Poly(1);
        for (int i = 1; i <= 3; ++i)
            for (int b = 0; b < kDim; ++b) seed.at(i, b) = sigma.at(i, b);
        CHECK(sigma_by_decomposition(e.yd(), seed) == sigma);
    }
}

TEST_CASE("numeric parameters specialize the symbolic table") {
    const CleftParams sym = CleftParams::pointed_symbolic();
    const BiFunctional s = sigma_from_section(CleftObject(sym, realization_for(sym)));
    const CleftParams num = CleftParams::pointed(Rational(3), Rational(-1, 2));
    const BiFunctional n = sigma_from_section(CleftObject(num, realization_for(num)));
    CHECK(evaluate_params(s, {Rational(3), Rational(-1, 2)}) == n);
    CHECK_FALSE(num.is_symbolic());
    CHECK(sym.is_symbolic());
}
