#pragma once

#include "fk3/forms.hpp"
#include "fk3/realization.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fk3 {

struct SmashTerm {
    int i;
    Rational c;
};
using SmashSparse = std::vector<SmashTerm>;

// Bosonization A = FK3 # H on the basis b # h (h a group element or a dual
// basis element delta_w), index b * |H-basis| + h.
//   (b # h)(b' # h') = b (h1 . b') # h2 h'
//   Delta(b # h) = b1 # b2_(-1) h1 (x) b2_(0) # h2
class SmashAlgebra {
public:
    explicit SmashAlgebra(const Realization& r);

    const Realization& realization() const { return yd_->realization(); }
    const YD& yd() const { return *yd_; }
    int dim() const { return kDim * hd_; }
    int h_dim() const { return hd_; }
    int index(int b, int h) const { return b * hd_ + h; }
    int b_of(int i) const { return i / hd_; }
    int h_of(int i) const { return i % hd_; }
    int degree(int i) const { return basis_degree(b_of(i)); }
    std::string name(int i) const;

    const SmashSparse& product(int i, int j) const { return product_[i * dim() + j]; }
    const SparseT2& coproduct(int i) const { return coproduct_[i]; }
    int counit(int i) const;
    // Coefficients of the unit 1 # 1_H.
    const SmashSparse& unit() const { return unit_; }
    // b # 1_H as a sparse element.
    SmashSparse embed(int b) const;

    template <class S>
    std::vector<S> multiply(const std::vector<S>& u, const std::vector<S>& v) const;

private:
    const YD* yd_;
    int hd_;
    std::vector<SmashSparse> product_;
    std::vector<SparseT2> coproduct_;
    SmashSparse unit_;
};

// Dense bilinear form on A.
template <class S>
struct SmashForm {
    int n = 0;
    std::vector<S> v;
    SmashForm() = default;
    explicit SmashForm(int dim) : n(dim), v(static_cast<std::size_t>(dim) * dim) {}
    S& at(int i, int j) { return v[static_cast<std::size_t>(i) * n + j]; }
    const S& at(int i, int j) const { return v[static_cast<std::size_t>(i) * n + j]; }
    friend bool operator==(const SmashForm& a, const SmashForm& b) { return a.v == b.v; }
};

// sigma_A(b # h, b' # h') = sigma(b, h . b') epsilon(h').
SmashForm<Poly> extend_cocycle(const SmashAlgebra& a, const BiFunctional& sigma);
SmashForm<Rational> evaluate_form(const SmashForm<Poly>& f, const std::vector<Rational>& values);
// Restriction to pairs (b # 1, b' # 1).
BiFunctional restrict_to_b(const SmashAlgebra& a, const SmashForm<Poly>& f);

// Ordinary convolution of bilinear forms on A.
SmashForm<Poly> convolve(const SmashAlgebra& a, const SmashForm<Poly>& f, const SmashForm<Poly>& g);
SmashForm<Poly> smash_unit_form(const SmashAlgebra& a);

struct CocycleReport {
    bool ok = true;
    std::size_t triples = 0;
    std::string counterexample;
};

// Checks sigma(x1, y1) sigma(x2 y2, z) = sigma(y1, z1) sigma(x, y2 z2) and
// the normalization.  max_degree < 0 sweeps all triples; otherwise only
// triples of total FK3-degree <= max_degree.
template <class S>
CocycleReport verify_hopf_cocycle(const SmashAlgebra& a, const SmashForm<S>& sigma, int max_degree = -1,
                                  int workers = 1);

// Functional alpha # epsilon on A.
std::vector<Poly> extend_functional(const SmashAlgebra& a, const Functional& alpha);

// (alpha -> sigma)(x, y) = alpha(x1) alpha(y1) sigma(x2, y2) alpha^{-1}(x3 y3)
// computed in A with alpha # epsilon, restricted to B.
BiFunctional cohomology_act(const SmashAlgebra& a, const Functional& alpha, const SmashForm<Poly>& sigma);

// Multiplication of A_sigma: m(x, y) = sigma(x1, y1) x2 y2 sigma^{-1}(x3, y3).
template <class S>
class DeformedProduct {
public:
    DeformedProduct(const SmashAlgebra& a, const SmashForm<S>& sigma, const SmashForm<S>& sigma_inv);
    const std::vector<S>& product(int i, int j) const { return table_[static_cast<std::size_t>(i) * a_->dim() + j]; }
    std::vector<S> multiply(const std::vector<S>& u, const std::vector<S>& v) const;
    const SmashAlgebra& algebra() const { return *a_; }

private:
    const SmashAlgebra* a_;
    std::vector<std::vector<S>> table_;
};

// m(u, v) for arbitrary elements without building the full table.
template <class S>
std::vector<S> deformed_multiply(const SmashAlgebra& a, const SmashForm<S>& sigma, const SmashForm<S>& sigma_inv,
                                 const std::vector<S>& u, const std::vector<S>& v);

// sigma^{-1} on A from the braided inverse of sigma on B.
SmashForm<Poly> extend_inverse(const SmashAlgebra& a, const BiFunctional& sigma);

std::string element_to_string(const SmashAlgebra& a, const std::vector<Poly>& v);

}  // namespace fk3
