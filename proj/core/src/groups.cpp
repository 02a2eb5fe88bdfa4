#include "fk3/groups.hpp"

#include <regex>
#include <stdexcept>

namespace fk3 {

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
}  // namespace

DihedralLikeElt DihedralLikeElt::make(int a, int b, int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    return {mod(a, 3), mod(b, 2 * ell), ell};
}

DihedralLikeElt DihedralLikeElt::from_index(int idx, int ell) { return make(idx / (2 * ell), idx % (2 * ell), ell); }

DihedralLikeElt g_mul(const DihedralLikeElt& a, const DihedralLikeElt& b) {
    if (a.ell != b.ell) throw std::invalid_argument("g_mul: elements of different groups");
    int sign = (a.t_exp % 2 == 0) ? 1 : -1;
    return DihedralLikeElt::make(a.s_exp + sign * b.s_exp, a.t_exp + b.t_exp, a.ell);
}

DihedralLikeElt g_inv(const DihedralLikeElt& a) {
    // (s^a t^b)^{-1} = t^{-b} s^{-a} = s^{-(-1)^b a} t^{-b}
    int sign = (a.t_exp % 2 == 0) ? 1 : -1;
    return DihedralLikeElt::make(-sign * a.s_exp, -a.t_exp, a.ell);
}

std::vector<DihedralLikeElt> all_elements(int ell) {
    std::vector<DihedralLikeElt> out;
    for (int idx = 0; idx < 6 * ell; ++idx) out.push_back(DihedralLikeElt::from_index(idx, ell));
    return out;
}

std::string to_string(const DihedralLikeElt& g) {
    if (g.s_exp == 0 && g.t_exp == 0) return "e";
    std::string out;
    if (g.s_exp == 1) out = "s";
    else if (g.s_exp > 1) out = "s^" + std::to_string(g.s_exp);
    if (g.t_exp != 0) {
        if (!out.empty()) out += "*";
        out += g.t_exp == 1 ? "t" : "t^" + std::to_string(g.t_exp);
    }
    return out;
}

DihedralLikeElt parse_dihedral(const std::string& text, int ell) {
    if (text == "e" || text == "1") return DihedralLikeElt::identity(ell);
    static const std::regex re(R"(^\s*(?:s(?:\^(-?\d+))?)?\s*\*?\s*(?:t(?:\^(-?\d+))?)?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re) || text.find_first_of("st") == std::string::npos)
        throw std::invalid_argument("cannot parse group element: " + text);
    bool has_s = text.find('s') != std::string::npos;
    bool has_t = text.find('t') != std::string::npos;
    int a = has_s ? (m[1].matched ? std::stoi(m[1].str()) : 1) : 0;
    int b = has_t ? (m[2].matched ? std::stoi(m[2].str()) : 1) : 0;
    return DihedralLikeElt::make(a, b, ell);
}

Perm3 Perm3::transposition(int a, int b) {
    Perm3 p;
    p.images[a - 1] = b;
    p.images[b - 1] = a;
    return p;
}

Perm3 Perm3::cycle(int a, int b, int c) {
    Perm3 p;
    p.images[a - 1] = b;
    p.images[b - 1] = c;
    p.images[c - 1] = a;
    return p;
}

Perm3 Perm3::from_index(int idx) {
    switch (idx) {
        case 0: return identity();
        case 1: return transposition(1, 2);
        case 2: return transposition(2, 3);
        case 3: return transposition(1, 3);
        case 4: return cycle(1, 2, 3);
        case 5: return cycle(1, 3, 2);
        default: throw std::out_of_range("Perm3 index");
    }
}

int Perm3::index() const {
    for (int i = 0; i < 6; ++i)
        if (from_index(i) == *this) return i;
    throw std::logic_error("invalid permutation");
}

int Perm3::sign() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (images[i] > images[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Perm3 Perm3::inverse() const {
    Perm3 r;
    for (int i = 0; i < 3; ++i) r.images[images[i] - 1] = i + 1;
    return r;
}

Perm3 operator*(const Perm3& p, const Perm3& q) {
    Perm3 r;
    for (int i = 0; i < 3; ++i) r.images[i] = p.images[q.images[i] - 1];
    return r;
}

std::string to_string(const Perm3& p) {
    switch (p.index()) {
        case 0: return "e";
        case 1: return "(12)";
        case 2: return "(23)";
        case 3: return "(13)";
        case 4: return "(123)";
        default: return "(132)";
    }
}

Perm3 parse_perm3(const std::string& text) {
    for (int i = 0; i < 6; ++i)
        if (to_string(Perm3::from_index(i)) == text) return Perm3::from_index(i);
    // Accept the equivalent spellings of each cycle.
    if (text == "(21)") return Perm3::transposition(1, 2);
    if (text == "(32)") return Perm3::transposition(2, 3);
    if (text == "(31)") return Perm3::transposition(1, 3);
    if (text == "(231)" || text == "(312)") return Perm3::cycle(1, 2, 3);
    if (text == "(213)" || text == "(321)") return Perm3::cycle(1, 3, 2);
    throw std::invalid_argument("cannot parse permutation: " + text);
}

std::vector<Perm3> all_perm3() {
    std::vector<Perm3> out;
    for (int i = 0; i < 6; ++i) out.push_back(Perm3::from_index(i));
    return out;
}

int rack(int i, int j) { return mod(2 * i - j, 3); }

Perm3 transposition_of(int i) {
    switch (mod(i, 3)) {
        case 0: return Perm3::transposition(1, 2);
        case 1: return Perm3::transposition(2, 3);
        default: return Perm3::transposition(1, 3);
    }
}

int index_of_transposition(const Perm3& p) {
    for (int i = 0; i < 3; ++i)
        if (transposition_of(i) == p) return i;
    return -1;
}

int conj_index(const DihedralLikeElt& g, int i, int k) {
    DihedralLikeElt gi = DihedralLikeElt::g(i, k, g.ell);
    DihedralLikeElt c = g_mul(g_mul(g, gi), g_inv(g));
    if (c.t_exp != gi.t_exp) throw std::logic_error("conjugation left the class of g_i");
    return c.s_exp;
}

std::pair<int, int> act_on_generator(const DihedralLikeElt& g, int i, int k) {
    int sign = (g.t_exp % 2 == 0) ? 1 : -1;
    return {sign, conj_index(g, i, k)};
}

Perm3 to_perm3(const DihedralLikeElt& g) {
    if (g.ell != 1) throw std::invalid_argument("to_perm3 requires ell = 1");
    Perm3 s = Perm3::cycle(1, 3, 2);
    Perm3 t = Perm3::transposition(1, 2);
    Perm3 r;
    for (int a = 0; a < g.s_exp; ++a) r = r * s;
    for (int b = 0; b < g.t_exp; ++b) r = r * t;
    return r;
}

int displayed_index_formula(int j, int r, int i, int k) { return mod(j - r * i - k + 1, 3); }

}  // namespace fk3
