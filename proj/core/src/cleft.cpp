#include "fk3/cleft.hpp"

#include "fk3/fk3.hpp"

#include <sstream>

namespace fk3 {

CleftParams CleftParams::pointed_symbolic() {
    CleftParams p;
    p.kind = RealizationKind::Pointed;
    p.ctx = pointed_context();
    p.lambda = Poly::var(p.ctx, "lambda");
    p.mu = Poly::var(p.ctx, "mu");
    return p;
}

CleftParams CleftParams::copointed_symbolic() {
    CleftParams p;
    p.kind = RealizationKind::Copointed;
    p.ctx = copointed_context();
    for (int i = 0; i < 3; ++i) p.c[i] = Poly::var(p.ctx, i);
    return p;
}

CleftParams CleftParams::pointed(const Rational& lambda, const Rational& mu) {
    CleftParams p;
    p.kind = RealizationKind::Pointed;
    p.ctx = pointed_context();
    p.lambda = Poly(p.ctx, lambda);
    p.mu = Poly(p.ctx, mu);
    return p;
}

CleftParams CleftParams::copointed(const Rational& c0, const Rational& c1, const Rational& c2) {
    CleftParams p;
    p.kind = RealizationKind::Copointed;
    p.ctx = copointed_context();
    p.c = {Poly(p.ctx, c0), Poly(p.ctx, c1), Poly(p.ctx, c2)};
    return p;
}

Poly CleftParams::lambda_bar() const { return lambda * Rational(1, 3); }

bool CleftParams::is_symbolic() const {
    if (is_pointed()) return !lambda.is_constant() || !mu.is_constant();
    for (const auto& ci : c)
        if (!ci.is_constant()) return true;
    return false;
}

std::string CleftParams::describe() const {
    std::ostringstream os;
    if (is_pointed())
        os << "lambda=" << lambda.to_string() << ", mu=" << mu.to_string();
    else
        os << "c0=" << c[0].to_string() << ", c1=" << c[1].to_string() << ", c2=" << c[2].to_string();
    return os.str();
}

RewriteSystem cleft_rewrite_system(const CleftParams& p) {
    std::vector<RewriteRule> rules;
    if (p.is_pointed()) {
        const Poly& l = p.lambda;
        for (int i = 0; i < 3; ++i) rules.push_back({{i, i}, {{{}, p.mu}}});
        rules.push_back({{1, 2}, {{{}, l}, {{0, 1}, Poly(-1)}, {{2, 0}, Poly(-1)}}});
        rules.push_back({{2, 1}, {{{}, l}, {{1, 0}, Poly(-1)}, {{0, 2}, Poly(-1)}}});
        rules.push_back({{0, 2, 0}, {{{2, 0, 2}, Poly(1)}, {{2}, -l}, {{0}, l}}});
        rules.push_back({{1, 0, 1}, {{{0, 1, 0}, Poly(1)}, {{0}, -l}, {{1}, l}}});
    } else {
        const auto& c = p.c;
        for (int i = 0; i < 3; ++i) rules.push_back({{i, i}, {{{}, c[i]}}});
        rules.push_back({{1, 2}, {{{0, 1}, Poly(-1)}, {{2, 0}, Poly(-1)}}});
        rules.push_back({{2, 1}, {{{1, 0}, Poly(-1)}, {{0, 2}, Poly(-1)}}});
        rules.push_back({{0, 2, 0}, {{{2, 0, 2}, Poly(1)}, {{1}, c[2] - c[0]}}});
        rules.push_back({{1, 0, 1}, {{{0, 1, 0}, Poly(1)}, {{2}, c[0] - c[1]}}});
    }
    rules.push_back({{1, 0, 2}, {{{2, 0, 1}, Poly(1)}}});
    return RewriteSystem(std::move(rules));
}

Realization realization_for(const CleftParams& p, int ell, int k) {
    return p.is_pointed() ? Realization::pointed(ell, k) : Realization::copointed();
}

namespace {

Element combination(const CleftObject& e, const LinComb& terms) {
    Element out;
    for (const auto& [w, coef] : terms) out.add_scaled(e.word(w), coef);
    return out;
}

}  // namespace

CleftObject::CleftObject(const CleftParams& p, const Realization& r)
    : p_(p), r_(r), yd_(&yd_for(r)), table_(cleft_rewrite_system(p), p.ctx) {
    if (p.kind != r.kind) throw std::invalid_argument("cleft parameters do not match the realization");
    const auto& bw = basis_words();
    int hd = r_.h_dim();

    act_.assign(static_cast<std::size_t>(hd) * kDim, Element{});
    for (int h = 0; h < hd; ++h)
        for (int b = 0; b < kDim; ++b) {
            auto [sign, w] = yd_->act_word(h, bw[b]);
            if (sign == 0) continue;
            Element v = word(w);
            if (sign < 0) v *= Poly(-1);
            act_[h * kDim + b] = v;
        }

    const Poly one(1);
    const Poly m1(-1);
    if (p_.is_pointed()) {
        const Poly lb = p_.lambda_bar();
        const Poly& mu = p_.mu;
        gamma_[0] = Element::unit();
        gamma_inv_[0] = Element::unit();
        for (int i = 0; i < 3; ++i) {
            gamma_[1 + i] = word({i});
            gamma_inv_[1 + i] = word({i}) * m1;
        }
        for (int b = 4; b <= 7; ++b) gamma_[b] = combination(*this, {{bw[b], one}, {{}, -lb}});
        gamma_inv_[7] = combination(*this, {{{2, 0}, m1}, {{}, lb}});  // x0x1
        gamma_inv_[6] = combination(*this, {{{2, 1}, m1}, {{}, lb}});  // x1x0
        gamma_inv_[4] = combination(*this, {{{1, 2}, m1}, {{}, lb}});  // x2x0
        gamma_inv_[5] = combination(*this, {{{1, 0}, m1}, {{}, lb}});  // x0x2
        gamma_[10] = combination(*this, {{{2, 0, 1}, one}, {{0}, mu}, {{2}, -lb}, {{1}, -lb}});
        gamma_[8] = combination(*this, {{{0, 2, 1}, m1}, {{2}, -mu}, {{0}, lb}, {{1}, lb}});
        gamma_[9] = combination(*this, {{{2, 1, 0}, m1}, {{1}, -mu}, {{2}, lb}, {{0}, lb}});
        gamma_inv_[9] = combination(*this, {{{2, 1, 0}, one}, {{1}, mu}, {{2}, -lb}, {{0}, -lb}});
        gamma_inv_[8] = combination(*this, {{{0, 2, 1}, one}, {{2}, mu}, {{0}, -lb}, {{1}, -lb}});
        gamma_inv_[10] = combination(*this, {{{2, 0, 1}, m1}, {{0}, -mu}, {{2}, lb}, {{1}, lb}});
        LinComb top = {{{2, 0, 1, 0}, one},  {{2, 0}, Rational(-2) * lb}, {{1, 0}, Rational(-2) * lb},
                       {{0, 1}, -lb},        {{0, 2}, -lb}};
        gamma_[11] = combination(*this, top);
        // The constant of gamma^{-1}(x2x0x1x0) is 9 lb^2 + mu^2; with 6 lb^2 the
        // convolution gamma * gamma^{-1} fails at the top word.
        gamma_inv_[11] = gamma_[11] + Element::unit() * (Rational(6) * lb * lb + mu * mu);
        gamma_[11] += Element::unit() * (Rational(3) * lb * lb);
    } else {
        const auto& c = p_.c;
        gamma_[0] = Element::unit();
        gamma_inv_[0] = Element::unit();
        for (int i = 0; i < 3; ++i) {
            gamma_[1 + i] = word({i});
            gamma_inv_[1 + i] = word({i}) * m1;
        }
        for (int b = 4; b <= 7; ++b) {
            const Word& w = bw[b];
            int k = 3 - w[0] - w[1];
            gamma_[b] = word(w);
            gamma_inv_[b] = word({w[1], k}) * m1;
        }
        // x_i x_j x_i with (i, j) = (0, 1), (2, 0); x2x0x1 = -x2x1x2.
        gamma_[8] = word({0, 2, 1}) * m1;
        gamma_[9] = word({2, 1, 0}) * m1;
        gamma_[10] = word({2, 0, 1});
        gamma_inv_[8] = word({0, 2, 1});
        gamma_inv_[9] = word({2, 1, 0});
        gamma_inv_[10] = word({2, 0, 1}) * m1;
        gamma_[11] = word({2, 0, 1, 0});
        gamma_inv_[11] = gamma_[11] + Element::unit() * (c[2] * c[0] - c[2] * c[1] + c[0] * c[1]);
    }

    for (int b = 0; b < kDim; ++b) {
        Tensor2 acc;
        acc.at(0, 0) = Poly(1);
        for (int l : bw[b]) {
            Tensor2 gen;
            gen.at(1 + l, 0) = Poly(1);
            gen.at(0, 1 + l) = Poly(1);
            acc = comodule_product(acc, gen);
        }
        rho_[b] = acc;
    }
}

Element CleftObject::act(int h, const Element& a) const {
    Element out;
    for (int b = 0; b < kDim; ++b)
        if (!a.c[b].is_zero()) out.add_scaled(act(h, b), a.c[b]);
    return out;
}

Element CleftObject::gamma(const Element& a) const {
    Element out;
    for (int b = 0; b < kDim; ++b)
        if (!a.c[b].is_zero()) out.add_scaled(gamma_[b], a.c[b]);
    return out;
}

Element CleftObject::gamma_inv(const Element& a) const {
    Element out;
    for (int b = 0; b < kDim; ++b)
        if (!a.c[b].is_zero()) out.add_scaled(gamma_inv_[b], a.c[b]);
    return out;
}

Tensor2 CleftObject::rho(const Element& a) const {
    Tensor2 out;
    for (int b = 0; b < kDim; ++b) {
        if (a.c[b].is_zero()) continue;
        for (int i = 0; i < kDim * kDim; ++i)
            if (!rho_[b].c[i].is_zero()) out.c[i].add_product(a.c[b], rho_[b].c[i]);
    }
    return out;
}

Tensor2 CleftObject::comodule_product(const Tensor2& a, const Tensor2& b) const {
    const AlgebraTable& m = fk3_table();
    Tensor2 out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Poly& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (const auto& [h, bj0] : yd_->coaction(j))
                for (int k = 0; k < kDim; ++k)
                    for (int l = 0; l < kDim; ++l) {
                        const Poly& bkl = b.at(k, l);
                        if (bkl.is_zero()) continue;
                        const Element& hk = act(h, k);
                        if (hk.is_zero()) continue;
                        Element left = table_.multiply(Element::basis(i), hk);
                        Element right = m.multiply(bj0, Element::basis(l));
                        if (left.is_zero() || right.is_zero()) continue;
                        Poly s = aij * bkl;
                        for (int p = 0; p < kDim; ++p) {
                            if (left.c[p].is_zero()) continue;
                            Poly sp = s * left.c[p];
                            for (int q = 0; q < kDim; ++q)
                                if (!right.c[q].is_zero()) out.at(p, q).add_product(sp, right.c[q]);
                        }
                    }
        }
    return out;
}

SectionReport verify_section(const CleftObject& e) {
    SectionReport rep;
    const YD& yd = e.yd();
    const AlgebraTable& m = e.table();
    for (int b = 0; b < kDim; ++b) {
        // (gamma (x) id) Delta(b)
        Tensor2 expect;
        for (const auto& t : yd.coproduct(b)) {
            const Element& g = e.gamma(t.i);
            for (int p = 0; p < kDim; ++p)
                if (!g.c[p].is_zero()) expect.at(p, t.j).add_scaled(g.c[p], t.c);
        }
        if (e.rho(e.gamma(b)) != expect) {
            rep.colinear = false;
            rep.failures.push_back("rho(gamma(" + basis_name(b) + ")) != (gamma (x) id) Delta");
        }
        Element left, right;
        for (const auto& t : yd.coproduct(b)) {
            left.add_scaled(m.multiply(e.gamma(t.i), e.gamma_inv(t.j)), Poly(t.c));
            right.add_scaled(m.multiply(e.gamma_inv(t.i), e.gamma(t.j)), Poly(t.c));
        }
        Element eps = b == 0 ? Element::unit() : Element{};
        if (left != eps) {
            rep.convolution_inverse = false;
            rep.failures.push_back("(gamma * gamma^-1)(" + basis_name(b) + ") = " + left.to_string('y'));
        }
        if (right != eps) {
            rep.convolution_inverse = false;
            rep.failures.push_back("(gamma^-1 * gamma)(" + basis_name(b) + ") = " + right.to_string('y'));
        }
        for (int h = 0; h < yd.h_dim(); ++h)
            if (e.gamma(yd.act(h, b)) != e.act(h, e.gamma(b))) {
                rep.h_linear = false;
                rep.failures.push_back("gamma(" + e.realization().h_name(h) + "." + basis_name(b) + ") != " +
                                       e.realization().h_name(h) + ".gamma");
                break;
            }
    }
    return rep;
}

}  // namespace fk3
