#include "fk3/forms.hpp"

#include "fk3/cleft.hpp"
#include "fk3/fk3.hpp"

#include <stdexcept>

namespace fk3 {

bool TripleForm::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

BiFunctional bi_unit() {
    BiFunctional f;
    f.at(0, 0) = Poly(1);
    return f;
}

Functional counit_functional() { return Element::unit(); }

BiFunctional convolve(const YD& yd, const BiFunctional& f, const BiFunctional& g) {
    BiFunctional out;
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
            Poly acc;
            for (const auto& ca : yd.coproduct(a))
                for (const auto& cb : yd.coproduct(b)) {
                    Rational s = ca.c * cb.c;
                    for (const auto& br : yd.braiding(ca.j, cb.i)) {
                        const Poly& fv = f.at(ca.i, br.i);
                        if (fv.is_zero()) continue;
                        const Poly& gv = g.at(br.j, cb.j);
                        if (gv.is_zero()) continue;
                        acc += fv * gv * (s * br.c);
                    }
                }
            out.at(a, b) = acc;
        }
    return out;
}

Functional convolve(const YD& yd, const Functional& f, const Functional& g) {
    Functional out;
    for (int a = 0; a < kDim; ++a) {
        Poly acc;
        for (const auto& t : yd.coproduct(a)) {
            if (f.c[t.i].is_zero() || g.c[t.j].is_zero()) continue;
            acc += f.c[t.i] * g.c[t.j] * t.c;
        }
        out.c[a] = acc;
    }
    return out;
}

namespace {

template <class F>
F neumann_inverse(const YD& yd, const F& f, const F& unit, const Poly& head) {
    if (head != Poly(1)) throw std::invalid_argument("convolution inverse needs value 1 at the unit");
    // f = unit - n, f^{-1} = sum n^{*k}; n vanishes at total degree 0.
    F n = unit - f;
    F out = unit;
    F power = unit;
    for (int k = 1; k <= 9; ++k) {
        power = convolve(yd, power, n);
        if (power.is_zero()) break;
        out += power;
    }
    return out;
}

}  // namespace

BiFunctional convolution_inverse(const YD& yd, const BiFunctional& f) {
    return neumann_inverse(yd, f, bi_unit(), f.at(0, 0));
}

Functional convolution_inverse(const YD& yd, const Functional& f) {
    return neumann_inverse(yd, f, counit_functional(), f.c[0]);
}

BiFunctional convolution_power(const YD& yd, const BiFunctional& eta, int n) {
    BiFunctional out = bi_unit();
    for (int k = 0; k < n; ++k) out = convolve(yd, out, eta);
    return out;
}

BiFunctional exponential(const YD& yd, const BiFunctional& eta) {
    if (!eta.at(0, 0).is_zero()) throw std::invalid_argument("exponential needs eta(1,1) = 0");
    BiFunctional out = bi_unit();
    BiFunctional power = bi_unit();
    Rational fact = 1;
    for (int k = 1; k <= 9; ++k) {
        power = convolve(yd, power, eta);
        if (power.is_zero()) break;
        fact *= k;
        Rational inv = 1 / fact;
        for (int i = 0; i < kDim * kDim; ++i)
            if (!power.c[i].is_zero()) out.c[i].add_scaled(power.c[i], inv);
    }
    return out;
}

TripleForm convolve3(const YD& yd, const TripleForm& f, const TripleForm& g) {
    TripleForm out;
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 0; c < kDim; ++c) {
                Poly acc;
                for (const auto& ca : yd.coproduct(a))
                    for (const auto& cb : yd.coproduct(b))
                        for (const auto& cc : yd.coproduct(c)) {
                            Rational s = ca.c * cb.c * cc.c;
                            // b2 past c1, then a2 past b1 and past the image of c1.
                            for (const auto& bc : yd.braiding(cb.j, cc.i))
                                for (const auto& ab : yd.braiding(ca.j, cb.i))
                                    for (const auto& aq : yd.braiding(ab.j, bc.i)) {
                                        const Poly& fv = f.at(ca.i, ab.i, aq.i);
                                        if (fv.is_zero()) continue;
                                        const Poly& gv = g.at(aq.j, bc.j, cc.j);
                                        if (gv.is_zero()) continue;
                                        acc += fv * gv * (s * bc.c * ab.c * aq.c);
                                    }
                        }
                out.at(a, b, c) = acc;
            }
    return out;
}

TripleForm compose_id_m(const BiFunctional& f) {
    const AlgebraTable& m = fk3_table();
    TripleForm out;
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 0; c < kDim; ++c) {
                Poly acc;
                for (const auto& [p, cp] : constant_terms(m.product(b, c)))
                    if (!f.at(a, p).is_zero()) acc += f.at(a, p) * cp;
                out.at(a, b, c) = acc;
            }
    return out;
}

TripleForm compose_m_id(const BiFunctional& f) {
    const AlgebraTable& m = fk3_table();
    TripleForm out;
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 0; c < kDim; ++c) {
                Poly acc;
                for (const auto& [p, cp] : constant_terms(m.product(a, b)))
                    if (!f.at(p, c).is_zero()) acc += f.at(p, c) * cp;
                out.at(a, b, c) = acc;
            }
    return out;
}

TripleForm eps_tensor(const BiFunctional& f) {
    TripleForm out;
    for (int b = 0; b < kDim; ++b)
        for (int c = 0; c < kDim; ++c) out.at(0, b, c) = f.at(b, c);
    return out;
}

TripleForm tensor_eps(const BiFunctional& f) {
    TripleForm out;
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) out.at(a, b, 0) = f.at(a, b);
    return out;
}

Poly evaluate(const BiFunctional& f, const Element& a, const Element& b) {
    Poly acc;
    for (int i = 0; i < kDim; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; j < kDim; ++j)
            if (!b.c[j].is_zero() && !f.at(i, j).is_zero()) acc += a.c[i] * b.c[j] * f.at(i, j);
    }
    return acc;
}

Poly evaluate(const Functional& f, const Element& a) {
    Poly acc;
    for (int i = 0; i < kDim; ++i)
        if (!a.c[i].is_zero() && !f.c[i].is_zero()) acc += a.c[i] * f.c[i];
    return acc;
}

BiFunctional sigma_from_section(const CleftObject& e) {
    const YD& yd = e.yd();
    const AlgebraTable& m = fk3_table();
    BiFunctional out;
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y) {
            Element acc;
            for (const auto& cx : yd.coproduct(x))
                for (const auto& cy : yd.coproduct(y))
                    for (const auto& br : yd.braiding(cx.j, cy.i)) {
                        Element left = e.multiply(e.gamma(cx.i), e.gamma(br.i));
                        if (left.is_zero()) continue;
                        Element right = e.gamma_inv(m.product(br.j, cy.j));
                        if (right.is_zero()) continue;
                        acc.add_scaled(e.multiply(left, right), Poly(cx.c * cy.c * br.c));
                    }
            for (int b = 1; b < kDim; ++b)
                if (!acc.c[b].is_zero())
                    throw std::logic_error("section cocycle is not scalar at (" + basis_name(x) + ", " +
                                           basis_name(y) + ")");
            out.at(x, y) = acc.c[0];
        }
    return out;
}

BiFunctional sigma_by_decomposition(const YD& yd, const BiFunctional& seed) {
    const AlgebraTable& m = fk3_table();
    const auto& bw = basis_words();
    BiFunctional s;
    for (int b = 0; b < kDim; ++b) {
        s.at(0, b) = b == 0 ? Poly(1) : Poly();
        s.at(b, 0) = b == 0 ? Poly(1) : Poly();
    }
    for (int i = 1; i <= 3; ++i)
        for (int b = 1; b < kDim; ++b) s.at(i, b) = seed.at(i, b);

    auto sv = [&](int a, const Element& b) { return evaluate(s, Element::basis(a), b); };
    auto sx = [&](int x, const Element& b) { return evaluate(s, Element::basis(x), b); };

    for (int deg = 2; deg <= 4; ++deg)
        for (int a = 0; a < kDim; ++a) {
            if (basis_degree(a) != deg) continue;
            int x = 1 + bw[a][0];
            int ap = basis_index(Word(bw[a].begin() + 1, bw[a].end()));
            if (ap < 0) throw std::logic_error("suffix of a basis word is not a basis word");
            SparseT2 dap = yd.reduced_coproduct(ap);
            for (int b = 1; b < kDim; ++b) {
                SparseT2 db = yd.reduced_coproduct(b);
                Poly v = sx(x, m.product(ap, b));
                for (const auto& t : db) v += sv(ap, Element::basis(t.i)) * sx(x, Element::basis(t.j)) * t.c;
                for (const auto& t : dap)
                    for (const auto& [h, q] : yd.coaction(t.j)) {
                        v += sv(t.i, yd.act(h, b)) * sx(x, q) * t.c;
                        for (const auto& u : db)
                            v += sv(t.i, yd.act(h, u.i)) * sx(x, m.multiply(q, Element::basis(u.j))) * (t.c * u.c);
                    }
                for (const auto& t : dap) v -= s.at(x, t.i) * s.at(t.j, b) * t.c;
                s.at(a, b) = v;
            }
        }
    return s;
}

bool is_normalized(const BiFunctional& f) {
    for (int b = 0; b < kDim; ++b) {
        Poly e = b == 0 ? Poly(1) : Poly();
        if (f.at(0, b) != e || f.at(b, 0) != e) return false;
    }
    return true;
}

std::vector<std::string> differences(const BiFunctional& a, const BiFunctional& b, std::size_t limit) {
    std::vector<std::string> out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            if (a.at(i, j) != b.at(i, j) && out.size() < limit)
                out.push_back("(" + basis_name(i) + ", " + basis_name(j) + "): " + a.at(i, j).to_string() +
                              " vs " + b.at(i, j).to_string());
    return out;
}

BiFunctional evaluate_params(const BiFunctional& f, const std::vector<Rational>& values) {
    BiFunctional out;
    for (int i = 0; i < kDim * kDim; ++i)
        if (!f.c[i].is_zero()) out.c[i] = Poly(f.c[i].eval(values));
    return out;
}

BiFunctional substitute_params(const BiFunctional& f, const std::vector<Poly>& images) {
    BiFunctional out;
    for (int i = 0; i < kDim * kDim; ++i)
        if (!f.c[i].is_zero()) out.c[i] = f.c[i].substitute(images);
    return out;
}

}  // namespace fk3
