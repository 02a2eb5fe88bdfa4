#include "fk3/fk3.hpp"
#include "fk3/properties.hpp"
#include "fk3/realization.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fk3;
using fk3::testing::free_algebra_reduce;
using fk3::testing::quotient_dimension;

TEST_CASE("basis words and names") {
    CHECK(basis_name(0) == "1");
    CHECK(basis_name(4) == "x2*x0");
    CHECK(basis_name(kTop) == "x2*x0*x1*x0");
    for (int b = 0; b < kDim; ++b) {
        CHECK(parse_basis_name(basis_name(b)) == b);
        CHECK(basis_index(basis_words()[b]) == b);
    }
    CHECK(parse_basis_name("x0x1x0") == 8);
    CHECK_THROWS(parse_basis_name("x0x0"));
    CHECK(basis_index(Word{1, 2}) == -1);
}

TEST_CASE("Hilbert series 1, 3, 4, 3, 1 and dimension 12") {
    const std::vector<std::size_t> expected{1, 3, 4, 3, 1, 0};
    CHECK(hilbert_series(5) == expected);
    for (int n = 0; n <= 5; ++n) CHECK(quotient_dimension(n) == expected[n]);
    std::size_t total = 0;
    for (int b = 0; b < kDim; ++b) total += basis_degree(b) >= 0;
    CHECK(total == 12);
}

TEST_CASE("products agree with an independent reduction of the free algebra") {
    const AlgebraTable& t = fk3_table();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Word w = basis_words()[i];
            const Word& v = basis_words()[j];
            w.insert(w.end(), v.begin(), v.end());
            if (w.size() > 5) continue;
            CHECK_MESSAGE(t.product(i, j) == free_algebra_reduce(w), basis_name(i) << " * " << basis_name(j));
        }
    // Every word up to length 5.
    for (int n = 0; n <= 5; ++n) {
        std::size_t count = 1;
        for (int i = 0; i < n; ++i) count *= 3;
        for (std::size_t code = 0; code < count; ++code) {
            Word w(n);
            std::size_t c = code;
            for (int i = n - 1; i >= 0; --i) {
                w[i] = static_cast<int>(c % 3);
                c /= 3;
            }
            CHECK(t.reduce_word(w) == free_algebra_reduce(w));
        }
    }
}

TEST_CASE("relations hold and the rewriting system is confluent") {
    const AlgebraTable& t = fk3_table();
    for (int i = 0; i < 3; ++i) CHECK(t.reduce_word({i, i}).is_zero());
    CHECK((t.reduce_word({0, 1}) + t.reduce_word({1, 2}) + t.reduce_word({2, 0})).is_zero());
    CHECK((t.reduce_word({1, 0}) + t.reduce_word({2, 1}) + t.reduce_word({0, 2})).is_zero());
    CHECK(t.reduce_word({0, 2, 0}) == t.reduce_word({2, 0, 2}));
    CHECK(certify_confluence(fk3_rewrite_system(), 6) > 0);
    CHECK(check_associativity("FK3", t).ok);
    CHECK(counit(Element::unit()) == Poly(1));
    CHECK(counit(Element::basis(3)).is_zero());
}

TEST_CASE("coproduct of generators and counit") {
    for (const Realization& r : {Realization::pointed(1, 0), Realization::pointed(2, 1), Realization::copointed()}) {
        const YD& yd = yd_for(r);
        for (int i = 1; i <= 3; ++i) {
            Tensor2 expected;
            expected.at(i, 0) = Poly(1);
            expected.at(0, i) = Poly(1);
            CHECK(to_tensor(yd.coproduct(i)) == expected);
            CHECK(yd.reduced_coproduct(i).empty());
        }
        CHECK(to_tensor(yd.coproduct(0)) == Tensor2::pure(Element::unit(), Element::unit()));
        // Delta(x0 x1) = x0x1 (x) 1 + 1 (x) x0x1 + x0 (x) x1 + c(x0 (x) x1); the braiding is
        // -x_{i|>j} (x) x_i for the pointed realization and -x_j (x) x_{j|>i} for the copointed one.
        const int x0x1 = parse_basis_name("x0x1");
        Tensor2 d = to_tensor(yd.coproduct(x0x1));
        CHECK(d.at(x0x1, 0) == Poly(1));
        CHECK(d.at(0, x0x1) == Poly(1));
        CHECK(d.at(1, 2) == Poly(1));
        if (r.is_pointed()) CHECK(d.at(3, 1) == Poly(-1));
        else CHECK(d.at(2, 3) == Poly(-1));
        Tensor2 cross;
        if (r.is_pointed()) cross.at(3, 1) = Poly(-1);
        else cross.at(2, 3) = Poly(-1);
        CHECK(to_tensor(yd.braiding(1, 2)) == cross);
    }
}

TEST_CASE("braided Hopf structure in both realizations") {
    for (const Realization& r : {Realization::pointed(1, 0), Realization::pointed(2, 0), Realization::pointed(2, 1),
                                 Realization::copointed()}) {
        CAPTURE(r.describe());
        CHECK(check_braid_equation(r).ok);
        CHECK(check_coassociativity(r).ok);
        CHECK(check_counit(r).ok);
        CHECK(check_braided_multiplicativity(r).ok);
        CHECK(check_module_algebra(r).ok);
    }
}

TEST_CASE("a mutated table is caught") {
    AlgebraTable t = fk3_table();
    t.mutable_product(1, 0) += Element::basis(parse_basis_name("x1x0"));
    CHECK_FALSE(check_associativity("mutated", t).ok);
}

TEST_CASE("bosonization is a bialgebra") {
    for (const Realization& r : {Realization::pointed(1, 0), Realization::copointed()}) {
        const SmashAlgebra a(r);
        CHECK(a.dim() == 12 * r.h_dim());
        CHECK(check_smash_associativity(a).ok);
        CHECK(check_smash_coassociativity(a).ok);
        CHECK(check_smash_bialgebra(a).ok);
    }
}
