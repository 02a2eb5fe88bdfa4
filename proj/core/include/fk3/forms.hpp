#pragma once

#include "fk3/algebra.hpp"
#include "fk3/realization.hpp"

#include <string>
#include <vector>

namespace fk3 {

class CleftObject;

// Bilinear form on B: value at each pair of basis words.
using BiFunctional = Tensor2;
// Linear functional on B: value at each basis word.
using Functional = Element;

// Trilinear form on B, dense 12^3.
struct TripleForm {
    std::vector<Poly> c = std::vector<Poly>(kDim * kDim * kDim);
    Poly& at(int i, int j, int k) { return c[(i * kDim + j) * kDim + k]; }
    const Poly& at(int i, int j, int k) const { return c[(i * kDim + j) * kDim + k]; }
    bool is_zero() const;
    friend bool operator==(const TripleForm& a, const TripleForm& b) { return a.c == b.c; }
};

// epsilon (x) epsilon.
BiFunctional bi_unit();
Functional counit_functional();

// (f * g)(a, b) = f(a1, a2_(-1).b1) g(a2_(0), b2): convolution for the
// coalgebra structure of the braided tensor square B (x) B.
BiFunctional convolve(const YD& yd, const BiFunctional& f, const BiFunctional& g);
// (f * g)(a) = f(a1) g(a2).
Functional convolve(const YD& yd, const Functional& f, const Functional& g);
// Neumann series; throws std::invalid_argument if f(1,1) != 1 (resp. f(1) != 1).
BiFunctional convolution_inverse(const YD& yd, const BiFunctional& f);
Functional convolution_inverse(const YD& yd, const Functional& f);
// sum_k eta^{*k}/k!; eta must vanish at (1,1).  The series stops at the
// first vanishing power.
BiFunctional exponential(const YD& yd, const BiFunctional& eta);
// eta^{*n}.
BiFunctional convolution_power(const YD& yd, const BiFunctional& eta, int n);

// Triple forms on B^{(x)3} with the coalgebra structure of the braided tensor
// cube: (F * G)(a,b,c) = F(a1, a2_(-1).b1, (a2_(0)b2)_(-1).c1) ... expressed by
// two braidings moving the middle legs.
TripleForm convolve3(const YD& yd, const TripleForm& f, const TripleForm& g);
// f(a, bc) and f(ab, c) as triple forms; epsilon (x) f and f (x) epsilon.
TripleForm compose_id_m(const BiFunctional& f);
TripleForm compose_m_id(const BiFunctional& f);
TripleForm eps_tensor(const BiFunctional& f);
TripleForm tensor_eps(const BiFunctional& f);

// Value of f on (a, b) for arbitrary elements.
Poly evaluate(const BiFunctional& f, const Element& a, const Element& b);
Poly evaluate(const Functional& f, const Element& a);

// sigma(x, y) = gamma(x1) gamma(x2_(-1).y1) gamma^{-1}(x2_(0) y2), read off
// as a scalar; throws std::logic_error if a positive-degree coefficient
// survives.
BiFunctional sigma_from_section(const CleftObject& e);

// Recursive decomposition: every value with deg a >= 2 is rebuilt from the
// rows sigma(x_i, b), a = x a':
//   sigma(a,b) = sigma(x, a'b) + sigma(a', b_1) sigma(x, b_2)
//              + sigma(a'_1, a'_2(-1).b) sigma(x, a'_2(0))
//              + sigma(a'_1, a'_2(-1).b_1) sigma(x, a'_2(0) b_2)
//              - sigma(x, a'_1) sigma(a'_2, b)
// with reduced coproducts.  Only the degree-one rows of seed are read.
BiFunctional sigma_by_decomposition(const YD& yd, const BiFunctional& seed);

// Normalization sigma(1, b) = sigma(b, 1) = epsilon(b).
bool is_normalized(const BiFunctional& f);

// Entries that differ, as "(a, b): lhs vs rhs".
std::vector<std::string> differences(const BiFunctional& a, const BiFunctional& b, std::size_t limit = 8);

// Substitutes numeric values for all parameters of the context.
BiFunctional evaluate_params(const BiFunctional& f, const std::vector<Rational>& values);
BiFunctional substitute_params(const BiFunctional& f, const std::vector<Poly>& images);

}  // namespace fk3
