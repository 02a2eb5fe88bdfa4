#pragma once

#include "fk3/algebra.hpp"
#include "fk3/groups.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace fk3 {

enum class RealizationKind { Pointed, Copointed };

// Pointed: H = k G_{3,l} with x_i of degree g_i = s^i t^{2k+1}.
// Copointed: H = k^{S3} (dual basis delta_w), x_i of S3-degree the
// transposition matched with i.
struct Realization {
    RealizationKind kind = RealizationKind::Pointed;
    int ell = 1;
    int k = 0;

    static Realization pointed(int ell = 1, int k = 0);
    static Realization copointed();
    bool is_pointed() const { return kind == RealizationKind::Pointed; }
    int h_dim() const { return is_pointed() ? 6 * ell : 6; }
    std::string h_name(int h) const;
    std::string describe() const;
    bool operator==(const Realization& o) const {
        return kind == o.kind && (!is_pointed() || (ell == o.ell && k == o.k));
    }
};

struct T2Term {
    int i, j;
    Rational c;
};
using SparseT2 = std::vector<T2Term>;

struct T3Term {
    int i, j, k;
    Rational c;
};
using SparseT3 = std::vector<T3Term>;

// Rational-coefficient view of an element with constant coefficients.
std::vector<std::pair<int, Rational>> constant_terms(const Element& e);
Tensor2 to_tensor(const SparseT2& t);
SparseT2 to_sparse(const Tensor2& t);

// Yetter-Drinfeld structure of FK3 over H for one realization, with all
// tables precomputed.  The action and coaction are defined on words letter by
// letter, so the same data acts on the cleft objects (letters y).
class YD {
public:
    explicit YD(const Realization& r);

    const Realization& realization() const { return r_; }
    int h_dim() const { return r_.h_dim(); }

    // Hopf structure of H on its basis.  Products of basis elements are a
    // basis element or zero (-1).
    int h_mult(int a, int b) const;
    const std::vector<std::pair<int, int>>& h_coproduct(int h) const { return h_coproduct_[h]; }
    int h_counit(int h) const;
    // Basis elements whose sum is the unit of H.
    const std::vector<int>& h_unit() const { return h_unit_; }
    // Basis element acting as the identity in the group case; delta_e for the dual.
    int h_identity() const;

    // Word-level action: sign (0 if the word is annihilated) and image word.
    std::pair<int, Word> act_word(int h, const Word& w) const;
    // Word-level coaction: sum of (h, sign, word).
    std::vector<std::tuple<int, int, Word>> coact_word(const Word& w) const;

    DihedralLikeElt group_degree(const Word& w) const;  // pointed only
    static Perm3 s3_degree(const Word& w);

    const Element& act(int h, int b) const { return act_[h * kDim + b]; }
    Element act(int h, const Element& a) const;
    // b_(-1) (x) b_(0) as (h, element) pairs.
    const std::vector<std::pair<int, Element>>& coaction(int b) const { return coaction_[b]; }

    // c(u (x) v) = u_(-1).v (x) u_(0) on basis words.
    const SparseT2& braiding(int u, int v) const { return braiding_[u * kDim + v]; }
    Tensor2 braid(const Tensor2& t) const;
    // Product in the braided tensor square B (x) B.
    Tensor2 braided_product(const Tensor2& a, const Tensor2& b) const;

    const SparseT2& coproduct(int b) const { return coproduct_[b]; }
    Tensor2 coproduct(const Element& a) const;
    // Delta(b) - b (x) 1 - 1 (x) b, with the convention Delta(1) for b = 1.
    SparseT2 reduced_coproduct(int b) const;
    // (Delta (x) id) Delta.
    const SparseT3& coproduct3(int b) const { return coproduct3_[b]; }

private:
    void build();

    Realization r_;
    std::vector<std::vector<std::pair<int, int>>> h_coproduct_;
    std::vector<int> h_unit_;
    std::vector<Element> act_;
    std::vector<std::vector<std::pair<int, Element>>> coaction_;
    std::vector<SparseT2> braiding_;
    std::vector<SparseT2> coproduct_;
    std::vector<SparseT3> coproduct3_;
};

// Shared instance per realization (built once, then read-only).
const YD& yd_for(const Realization& r);

}  // namespace fk3
