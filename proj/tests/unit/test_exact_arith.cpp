#include "fk3/linsolve.hpp"
#include "fk3/poly.hpp"

#include <doctest.h>

#include <random>

using namespace fk3;

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2/1")) == "-2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic is exact and canonical") {
    const ContextPtr ctx = pointed_context();
    const Poly l = Poly::var(ctx, "lambda"), m = Poly::var(ctx, "mu");

    // (l + m)(l - m) = l^2 - m^2, independent of the order of operations.
    CHECK((l + m) * (l - m) == l * l - m * m);
    CHECK((l * m) * l == l * (m * l));
    CHECK((l - l).is_zero());
    CHECK(((l + 1) * Rational(1, 3)).to_string() == "1/3*lambda + 1/3");
    CHECK((m * m - l * l * Rational(1, 9)).to_string() == "mu^2 - 1/9*lambda^2");
    CHECK((l + m).pow(3) == l * l * l + l * l * m * Rational(3) + l * m * m * Rational(3) + m * m * m);
    CHECK(Poly(0).total_degree() == -1);
    CHECK((l * l * m + m).total_degree() == 3);
}

TEST_CASE("parsing accepts the transcription syntax and aliases") {
    const ContextPtr ctx = pointed_context();
    const Poly l = Poly::var(ctx, "lambda"), m = Poly::var(ctx, "mu");
    const Poly lb = l * Rational(1, 3);
    CHECK(parse_poly("2*lb*(lb-mu)", ctx, {{"lb", lb}}) == lb * (lb - m) * Rational(2));
    CHECK(parse_poly("(mu-lb)^2*(mu+2*lb)", ctx, {{"lb", lb}}) == (m - lb) * (m - lb) * (m + lb * Rational(2)));
    CHECK(parse_poly("-lb^2-mu^2", ctx, {{"lb", lb}}) == -(lb * lb) - m * m);
    CHECK(parse_poly("mu^2 - 1/9*lambda^2", ctx) == m * m - l * l * Rational(1, 9));
    CHECK_THROWS(parse_poly("nu", ctx));
    CHECK_THROWS(parse_poly("(mu", ctx));

    // Printing and parsing round-trip.
    const Poly p = m * m * m - l * l * m * Rational(1, 3) + l * l * l * Rational(2, 27);
    CHECK(parse_poly(p.to_string(), ctx) == p);
}

TEST_CASE("substitution and evaluation") {
    const ContextPtr ctx = pointed_context();
    const Poly l = Poly::var(ctx, "lambda"), m = Poly::var(ctx, "mu");
    const Poly p = l * l - m * Rational(3);
    CHECK(p.eval({Rational(3), Rational(2)}) == Rational(3));
    CHECK(p.substitute({l, l * Rational(1, 3)}) == l * l - l);
    CHECK(p.substitute({Poly(ctx, 0), m}) == m * Rational(-3));
}

TEST_CASE("polynomials from different contexts do not mix") {
    const Poly a = Poly::var(pointed_context(), "lambda");
    const Poly b = Poly::var(copointed_context(), "c0");
    CHECK_THROWS_AS(a + b, ContextMismatch);
    // Constants combine with any context.
    CHECK((a + Poly(2)).to_string() == "lambda + 2");
}

TEST_CASE("linear solver on hand-checked systems") {
    // x + y = 3, x - y = 1 has the unique solution (2, 1).
    RMatrix a{{1, 1}, {1, -1}};
    auto s = solve_linear(a, RVector{3, 1}, 2);
    REQUIRE(s.kind == SolutionKind::Unique);
    CHECK(s.particular == RVector{2, 1});

    // Rank-deficient: x + 2y = 1 and 2x + 4y = 2.
    RMatrix b{{1, 2}, {2, 4}};
    auto f = solve_linear(b, RVector{1, 2}, 2);
    CHECK(f.kind == SolutionKind::Family);
    CHECK(f.rank == 1);
    CHECK(f.kernel.size() == 1);
    CHECK(f.kernel[0][0] + f.kernel[0][1] * 2 == 0);

    CHECK(solve_linear(b, RVector{1, 3}, 2).kind == SolutionKind::Inconsistent);
    CHECK(matrix_rank(RMatrix{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3) == 2);
    CHECK(nullspace(RMatrix{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3).size() == 1);
    CHECK(in_row_space(b, RVector{3, 6}, 2));
    CHECK_FALSE(in_row_space(b, RVector{1, 0}, 2));
}

TEST_CASE("linear solver with polynomial right-hand sides") {
    const ContextPtr ctx = pointed_context();
    const Poly l = Poly::var(ctx, "lambda");
    auto s = solve_linear(RMatrix{{1, 1}, {1, -1}}, std::vector<Poly>{l * Rational(3), l}, 2);
    REQUIRE(s.kind == SolutionKind::Unique);
    CHECK(s.particular[0] == l * Rational(2));
    CHECK(s.particular[1] == l);
}

namespace {

Poly random_poly(std::mt19937_64& rng, const ContextPtr& ctx) {
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), exp(0, 2), terms(0, 4);
    Poly p;
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        Rational c(coef(rng), den(rng));
        c.canonicalize();
        Poly t(ctx, c);
        for (std::size_t v = 0; v < ctx->size(); ++v) t *= Poly::var(ctx, static_cast<int>(v)).pow(exp(rng));
        p += t;
    }
    return p;
}

}  // namespace

TEST_CASE("p and q expand as stated") {
    const ContextPtr ctx = pointed_context();
    const Poly l = Poly::var(ctx, "lambda"), m = Poly::var(ctx, "mu");
    const Poly lb = l * Rational(1, 3);
    const Poly p = (m - lb) * (m - lb) * (m + lb * Rational(2));
    // mu^3 + 2 lb^3 - 3 lb^2 mu, by distribution.
    CHECK(p == m * m * m + lb * lb * lb * Rational(2) - lb * lb * m * Rational(3));
    const Poly q = -(m * (p + lb * lb * lb * Rational(4)));
    CHECK(q.substitute({l, lb}) == lb.pow(4) * Rational(-4));
}

TEST_CASE("ring axioms and evaluation on random polynomials") {
    std::mt19937_64 rng(7);
    const ContextPtr ctx = copointed_context();
    std::uniform_int_distribution<int> small(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(rng, ctx), b = random_poly(rng, ctx), c = random_poly(rng, ctx);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        const std::vector<Rational> x{Rational(small(rng)), Rational(small(rng)), Rational(small(rng))};
        CHECK((a * b + c).eval(x) == a.eval(x) * b.eval(x) + c.eval(x));
    }
}

TEST_CASE("solutions satisfy their systems") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> v(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        RMatrix a(4, RVector(5));
        RVector b(4);
        for (auto& row : a)
            for (auto& x : row) x = v(rng);
        for (auto& x : b) x = v(rng);
        auto s = solve_linear(a, b, 5);
        if (s.kind == SolutionKind::Inconsistent) continue;
        for (std::size_t i = 0; i < 4; ++i) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < 5; ++j) lhs += a[i][j] * s.particular[j];
            CHECK(lhs == b[i]);
            for (const RVector& k : s.kernel) {
                Rational z = 0;
                for (std::size_t j = 0; j < 5; ++j) z += a[i][j] * k[j];
                CHECK(z == 0);
            }
        }
    }
    auto id = solve_linear(RMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, RVector{4, -1, Rational(1, 2)}, 3);
    CHECK(id.kind == SolutionKind::Unique);
    CHECK(id.particular == RVector{4, -1, Rational(1, 2)});
    CHECK(solve_linear(RMatrix{{0, 0}, {0, 0}}, RVector{0, 1}, 2).kind == SolutionKind::Inconsistent);
}
