#pragma once

#include "fk3/algebra.hpp"
#include "fk3/realization.hpp"

#include <array>
#include <string>
#include <vector>

namespace fk3 {

// Deformation parameters of a cleft object.  Pointed objects use (lambda, mu),
// copointed ones (c0, c1, c2); all live in one polynomial context.
struct CleftParams {
    RealizationKind kind = RealizationKind::Pointed;
    ContextPtr ctx;
    Poly lambda, mu;
    std::array<Poly, 3> c{};

    static CleftParams pointed_symbolic();
    static CleftParams copointed_symbolic();
    // Numeric values are stored as constants in the symbolic context.
    static CleftParams pointed(const Rational& lambda, const Rational& mu);
    static CleftParams copointed(const Rational& c0, const Rational& c1, const Rational& c2);

    bool is_pointed() const { return kind == RealizationKind::Pointed; }
    Poly lambda_bar() const;  // lambda / 3
    bool is_symbolic() const;
    std::string describe() const;
};

// Rewriting system of the cleft object: y_i^2 -> scalar, y1y2 and y2y1 by the
// cyclic relations, and the cubic consequences y0y2y0, y1y0y1, y1y0y2.
RewriteSystem cleft_rewrite_system(const CleftParams& p);

// Right FK3-comodule algebra E with its section.  E carries the H-action that
// mirrors the action on FK3 letter by letter.
class CleftObject {
public:
    CleftObject(const CleftParams& p, const Realization& r);

    const CleftParams& params() const { return p_; }
    const Realization& realization() const { return r_; }
    const YD& yd() const { return *yd_; }
    const AlgebraTable& table() const { return table_; }

    Element multiply(const Element& a, const Element& b) const { return table_.multiply(a, b); }
    Element word(const Word& w) const { return table_.reduce_word(w); }
    const Element& act(int h, int b) const { return act_[h * kDim + b]; }
    Element act(int h, const Element& a) const;

    const Element& gamma(int b) const { return gamma_[b]; }
    const Element& gamma_inv(int b) const { return gamma_inv_[b]; }
    Element gamma(const Element& a) const;
    Element gamma_inv(const Element& a) const;
    // Replaces one section value (used by mutation tests).
    void set_gamma(int b, const Element& e) { gamma_[b] = e; }

    // rho(y_i) = y_i (x) 1 + 1 (x) x_i extended multiplicatively into E (x) FK3
    // with product (e (x) b)(e' (x) b') = e (b_(-1).e') (x) b_(0) b'.
    Tensor2 rho(const Element& a) const;
    const Tensor2& rho_basis(int b) const { return rho_[b]; }
    Tensor2 comodule_product(const Tensor2& a, const Tensor2& b) const;

private:
    CleftParams p_;
    Realization r_;
    const YD* yd_;
    AlgebraTable table_;
    std::vector<Element> act_;
    std::array<Element, kDim> gamma_{};
    std::array<Element, kDim> gamma_inv_{};
    std::array<Tensor2, kDim> rho_{};
};

struct SectionReport {
    bool colinear = true;
    bool convolution_inverse = true;
    bool h_linear = true;
    std::vector<std::string> failures;
    bool ok() const { return colinear && convolution_inverse && h_linear; }
};

// rho o gamma = (gamma (x) id) Delta, gamma * gamma^{-1} = gamma^{-1} * gamma
// = unit o counit, and gamma(h.b) = h.gamma(b), on all basis words.
SectionReport verify_section(const CleftObject& e);

// Realization matching the parameter kind (pointed uses the given ell, k).
Realization realization_for(const CleftParams& p, int ell = 1, int k = 0);

}  // namespace fk3
