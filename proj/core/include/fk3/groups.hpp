#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace fk3 {

// Element s^a t^b of G_{3,l} = <s, t | s^3 = t^{2l} = 1, ts = s^2 t>.
struct DihedralLikeElt {
    int s_exp = 0;  // mod 3
    int t_exp = 0;  // mod 2l
    int ell = 1;

    static DihedralLikeElt make(int a, int b, int ell);
    static DihedralLikeElt identity(int ell) { return make(0, 0, ell); }
    static DihedralLikeElt s(int ell) { return make(1, 0, ell); }
    static DihedralLikeElt t(int ell) { return make(0, 1, ell); }
    // g_i = s^i t^{2k+1}
    static DihedralLikeElt g(int i, int k, int ell) { return make(i, 2 * k + 1, ell); }

    int order_of_group() const { return 6 * ell; }
    // Dense index a*2l + b in [0, 6l).
    int index() const { return s_exp * 2 * ell + t_exp; }
    static DihedralLikeElt from_index(int idx, int ell);

    bool operator==(const DihedralLikeElt& o) const {
        return s_exp == o.s_exp && t_exp == o.t_exp && ell == o.ell;
    }
    bool operator!=(const DihedralLikeElt& o) const { return !(*this == o); }
};

DihedralLikeElt g_mul(const DihedralLikeElt& a, const DihedralLikeElt& b);
DihedralLikeElt g_inv(const DihedralLikeElt& a);
std::vector<DihedralLikeElt> all_elements(int ell);

// "s^a*t^b" with reduced exponents; "e" for the identity, "s", "t" for
// exponent one.
std::string to_string(const DihedralLikeElt& g);
DihedralLikeElt parse_dihedral(const std::string& text, int ell);

// Permutation of {1,2,3}; images[i] is the image of i+1 (1-based values).
// Composition is right to left: (p*q)(x) = p(q(x)).
struct Perm3 {
    std::array<int, 3> images{1, 2, 3};

    static Perm3 identity() { return {}; }
    static Perm3 transposition(int a, int b);
    static Perm3 cycle(int a, int b, int c);
    // Dense enumeration: e, (12), (23), (13), (123), (132).
    static Perm3 from_index(int idx);
    int index() const;

    int sign() const;
    Perm3 inverse() const;
    bool operator==(const Perm3& o) const { return images == o.images; }
    bool operator!=(const Perm3& o) const { return images != o.images; }
};

Perm3 operator*(const Perm3& p, const Perm3& q);
std::string to_string(const Perm3& p);  // "e", "(12)", "(132)", ...
Perm3 parse_perm3(const std::string& text);
std::vector<Perm3> all_perm3();

// Rack index set X = {0,1,2} with i |> j = 2i - j mod 3.
int rack(int i, int j);
// The fixed identification 0 <-> (12), 1 <-> (23), 2 <-> (13).
Perm3 transposition_of(int i);
int index_of_transposition(const Perm3& p);  // -1 if not a transposition

// i' with g (s^i t^{2k+1}) g^{-1} = s^{i'} t^{2k+1}, by actual conjugation.
int conj_index(const DihedralLikeElt& g, int i, int k);
// (sign, index) with g . x_i = sign * x_index, sign = (-1)^{t_exp}.
std::pair<int, int> act_on_generator(const DihedralLikeElt& g, int i, int k);

// The S3 isomorphism for l = 1 sending s -> (132), t -> (12).
Perm3 to_perm3(const DihedralLikeElt& g);

// The displayed closed-form index j - r i - k + 1 (mod 3) for g = s^j t^r,
// kept only for the diagnostics comparison.
int displayed_index_formula(int j, int r, int i, int k);

}  // namespace fk3
