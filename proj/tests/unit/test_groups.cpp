#include "fk3/groups.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fk3;
using fk3::testing::compose;
using fk3::testing::invert;
using fk3::testing::perm_sign;

namespace {

// (s^a t^b)(s^c t^d) = s^{a + (-1)^b c} t^{b + d}, written out directly.
std::pair<int, int> law(int a, int b, int c, int d, int ell) {
    const int sign = b % 2 == 0 ? 1 : -1;
    return {((a + sign * c) % 3 + 3) % 3, (b + d) % (2 * ell)};
}

std::array<int, 3> perm_of_index(int i) {
    // 0 <-> (12), 1 <-> (23), 2 <-> (13)
    static const std::array<std::array<int, 3>, 3> t{{{2, 1, 3}, {1, 3, 2}, {3, 2, 1}}};
    return t[i];
}

int index_of_perm(const std::array<int, 3>& p) {
    for (int i = 0; i < 3; ++i)
        if (perm_of_index(i) == p) return i;
    return -1;
}

}  // namespace

TEST_CASE("group law of G_{3,ell} matches ts = s^2 t") {
    for (int ell : {1, 2, 3}) {
        const auto all = all_elements(ell);
        CHECK(all.size() == static_cast<std::size_t>(6 * ell));
        for (const auto& g : all)
            for (const auto& h : all) {
                const auto [a, b] = law(g.s_exp, g.t_exp, h.s_exp, h.t_exp, ell);
                CHECK(g_mul(g, h) == DihedralLikeElt::make(a, b, ell));
            }
        for (const auto& g : all) {
            CHECK(g_mul(g, g_inv(g)) == DihedralLikeElt::identity(ell));
            CHECK(g_mul(g_inv(g), g) == DihedralLikeElt::identity(ell));
            for (const auto& h : all)
                for (const auto& k : all) CHECK(g_mul(g_mul(g, h), k) == g_mul(g, g_mul(h, k)));
        }
    }
    const int ell = 1;
    CHECK(g_mul(DihedralLikeElt::t(ell), DihedralLikeElt::s(ell)) == DihedralLikeElt::make(2, 1, ell));
    DihedralLikeElt t4 = DihedralLikeElt::identity(2);
    for (int i = 0; i < 4; ++i) t4 = g_mul(t4, DihedralLikeElt::t(2));
    CHECK(t4 == DihedralLikeElt::identity(2));
}

TEST_CASE("element names round-trip") {
    for (int ell : {1, 2})
        for (const auto& g : all_elements(ell)) CHECK(parse_dihedral(to_string(g), ell) == g);
    CHECK(to_string(DihedralLikeElt::identity(1)) == "e");
    for (const auto& p : all_perm3()) CHECK(parse_perm3(to_string(p)) == p);
}

TEST_CASE("rack") {
    for (int i = 0; i < 3; ++i) {
        CHECK(rack(i, i) == i);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(rack(i, rack(j, k)) == rack(rack(i, j), rack(i, k)));
    }
    CHECK(rack(0, 1) == 2);
}

TEST_CASE("conjugation index") {
    for (int ell : {1, 2})
        for (int k = 0; k < ell; ++k) {
            for (int i = 0; i < 3; ++i) CHECK(conj_index(DihedralLikeElt::identity(ell), i, k) == i);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const auto [sign, idx] = act_on_generator(DihedralLikeElt::g(i, k, ell), j, k);
                    CHECK(sign == -1);
                    CHECK(idx == rack(i, j));
                }
        }
    // l = 1: s = (132), t = (12); (132)(12)(132)^{-1} = (13) <-> 2.
    const std::array<int, 3> s{3, 1, 2};
    const std::array<int, 3> conj = compose(compose(s, perm_of_index(0)), invert(s));
    CHECK(index_of_perm(conj) == 2);
    CHECK(conj_index(DihedralLikeElt::s(1), 0, 0) == 2);
}

TEST_CASE("the l = 1 action is the S3 action sign(w) x_{w sigma w^-1}") {
    for (const auto& g : all_elements(1)) {
        const Perm3 w = to_perm3(g);
        const std::array<int, 3> wp = w.images;
        for (int i = 0; i < 3; ++i) {
            const auto [sign, idx] = act_on_generator(g, i, 0);
            const std::array<int, 3> c = compose(compose(wp, perm_of_index(i)), invert(wp));
            CHECK(sign == perm_sign(wp));
            CHECK(idx == index_of_perm(c));
        }
    }
    // (12) . x1 = -x2
    const auto t = DihedralLikeElt::t(1);
    CHECK(to_string(to_perm3(t)) == "(12)");
    CHECK(act_on_generator(t, 1, 0) == std::pair<int, int>{-1, 2});
}

TEST_CASE("the action is a group action") {
    for (int ell : {1, 2})
        for (int k = 0; k < ell; ++k)
            for (const auto& g : all_elements(ell))
                for (const auto& h : all_elements(ell))
                    for (int i = 0; i < 3; ++i) {
                        const auto [s1, i1] = act_on_generator(h, i, k);
                        const auto [s2, i2] = act_on_generator(g, i1, k);
                        const auto [s3, i3] = act_on_generator(g_mul(g, h), i, k);
                        CHECK(s1 * s2 == s3);
                        CHECK(i2 == i3);
                    }
}

TEST_CASE("to_perm3 is an isomorphism") {
    const auto all = all_elements(1);
    for (const auto& g : all)
        for (const auto& h : all) CHECK(to_perm3(g_mul(g, h)) == to_perm3(g) * to_perm3(h));
    CHECK(to_string(to_perm3(DihedralLikeElt::s(1))) == "(132)");
}

TEST_CASE("displayed index formula disagrees with conjugation at the identity") {
    // j = r = 0 must give the identity action; the displayed formula gives -k + 1.
    CHECK(displayed_index_formula(0, 0, 0, 0) != conj_index(DihedralLikeElt::identity(1), 0, 0));
}
