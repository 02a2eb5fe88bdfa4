#include "fk3/smash.hpp"

#include "fk3/fk3.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace fk3 {

SmashAlgebra::SmashAlgebra(const Realization& r) : yd_(&yd_for(r)), hd_(r.h_dim()) {
    const AlgebraTable& m = fk3_table();
    const YD& yd = *yd_;
    int n = dim();

    product_.assign(static_cast<std::size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int b = b_of(i), h = h_of(i), b2 = b_of(j), h2 = h_of(j);
            std::map<int, Rational> acc;
            for (const auto& [u, v] : yd.h_coproduct(h)) {
                int hv = yd.h_mult(v, h2);
                if (hv < 0) continue;
                const Element& ub = yd.act(u, b2);
                if (ub.is_zero()) continue;
                Element prod = m.multiply(Element::basis(b), ub);
                for (const auto& [p, c] : constant_terms(prod)) acc[index(p, hv)] += c;
            }
            SmashSparse& out = product_[static_cast<std::size_t>(i) * n + j];
            for (const auto& [k, c] : acc)
                if (sgn(c) != 0) out.push_back({k, c});
        }

    coproduct_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        int b = b_of(i), h = h_of(i);
        std::map<std::pair<int, int>, Rational> acc;
        for (const auto& t : yd.coproduct(b))
            for (const auto& [w, b2] : yd.coaction(t.j))
                for (const auto& [h1, h2] : yd.h_coproduct(h)) {
                    int left_h = yd.h_mult(w, h1);
                    if (left_h < 0) continue;
                    for (const auto& [q, c] : constant_terms(b2))
                        acc[{index(t.i, left_h), index(q, h2)}] += t.c * c;
                }
        for (const auto& [key, c] : acc)
            if (sgn(c) != 0) coproduct_[i].push_back({key.first, key.second, c});
    }

    for (int h : yd.h_unit()) unit_.push_back({index(0, h), Rational(1)});
}

int SmashAlgebra::counit(int i) const { return b_of(i) == 0 ? yd_->h_counit(h_of(i)) : 0; }

SmashSparse SmashAlgebra::embed(int b) const {
    SmashSparse out;
    for (const auto& u : unit_) out.push_back({index(b, h_of(u.i)), u.c});
    return out;
}

std::string SmashAlgebra::name(int i) const {
    return basis_name(b_of(i)) + "#" + realization().h_name(h_of(i));
}

template <class S>
std::vector<S> SmashAlgebra::multiply(const std::vector<S>& u, const std::vector<S>& v) const {
    int n = dim();
    std::vector<S> out(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(u[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(v[j])) continue;
            S s = u[i] * v[j];
            for (const auto& t : product(i, j)) out[t.i] += s * t.c;
        }
    }
    return out;
}

template std::vector<Rational> SmashAlgebra::multiply(const std::vector<Rational>&,
                                                      const std::vector<Rational>&) const;
template std::vector<Poly> SmashAlgebra::multiply(const std::vector<Poly>&, const std::vector<Poly>&) const;

namespace {

SmashForm<Poly> extend_form(const SmashAlgebra& a, const BiFunctional& f) {
    const YD& yd = a.yd();
    int n = a.dim();
    SmashForm<Poly> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int eps = yd.h_counit(a.h_of(j));
            if (eps == 0) continue;
            const Element& hb = yd.act(a.h_of(i), a.b_of(j));
            Poly v;
            for (int p = 0; p < kDim; ++p)
                if (!hb.c[p].is_zero() && !f.at(a.b_of(i), p).is_zero()) v += hb.c[p] * f.at(a.b_of(i), p);
            out.at(i, j) = v * Rational(eps);
        }
    return out;
}

}  // namespace

SmashForm<Poly> extend_cocycle(const SmashAlgebra& a, const BiFunctional& sigma) { return extend_form(a, sigma); }

SmashForm<Poly> extend_inverse(const SmashAlgebra& a, const BiFunctional& sigma) {
    return extend_form(a, convolution_inverse(a.yd(), sigma));
}

SmashForm<Rational> evaluate_form(const SmashForm<Poly>& f, const std::vector<Rational>& values) {
    SmashForm<Rational> out(f.n);
    for (std::size_t i = 0; i < f.v.size(); ++i)
        if (!f.v[i].is_zero()) out.v[i] = f.v[i].eval(values);
    return out;
}

BiFunctional restrict_to_b(const SmashAlgebra& a, const SmashForm<Poly>& f) {
    BiFunctional out;
    for (int b = 0; b < kDim; ++b)
        for (int c = 0; c < kDim; ++c) {
            Poly v;
            for (const auto& x : a.embed(b))
                for (const auto& y : a.embed(c)) v += f.at(x.i, y.i) * (x.c * y.c);
            out.at(b, c) = v;
        }
    return out;
}

SmashForm<Poly> convolve(const SmashAlgebra& a, const SmashForm<Poly>& f, const SmashForm<Poly>& g) {
    int n = a.dim();
    SmashForm<Poly> out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Poly acc;
            for (const auto& cx : a.coproduct(x))
                for (const auto& cy : a.coproduct(y)) {
                    const Poly& fv = f.at(cx.i, cy.i);
                    if (fv.is_zero()) continue;
                    const Poly& gv = g.at(cx.j, cy.j);
                    if (gv.is_zero()) continue;
                    acc += fv * gv * (cx.c * cy.c);
                }
            out.at(x, y) = acc;
        }
    return out;
}

SmashForm<Poly> smash_unit_form(const SmashAlgebra& a) {
    int n = a.dim();
    SmashForm<Poly> out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int e = a.counit(x) * a.counit(y);
            if (e != 0) out.at(x, y) = Poly(e);
        }
    return out;
}

namespace {

template <class S>
std::string scalar_string(const S& s) {
    if constexpr (std::is_same_v<S, Rational>)
        return to_string(s);
    else
        return s.to_string();
}

// T(x, y) = sigma(x1, y1) x2 y2 as a dense vector.
template <class S>
std::vector<S> twisted_product(const SmashAlgebra& a, const SmashForm<S>& sigma, int x, int y) {
    std::vector<S> out(a.dim());
    for (const auto& cx : a.coproduct(x))
        for (const auto& cy : a.coproduct(y)) {
            const S& s = sigma.at(cx.i, cy.i);
            if (is_zero(s)) continue;
            S sc = s * (cx.c * cy.c);
            for (const auto& t : a.product(cx.j, cy.j)) out[t.i] += sc * t.c;
        }
    return out;
}

}  // namespace

template <class S>
CocycleReport verify_hopf_cocycle(const SmashAlgebra& a, const SmashForm<S>& sigma, int max_degree, int workers) {
    int n = a.dim();
    CocycleReport rep;
    auto within = [&](int d) { return max_degree < 0 || d <= max_degree; };

    // Normalization against the unit of A.
    for (int x = 0; x < n && rep.ok; ++x) {
        S l{}, r{};
        for (const auto& u : a.unit()) {
            l += sigma.at(x, u.i) * u.c;
            r += sigma.at(u.i, x) * u.c;
        }
        S e = S(a.counit(x));
        if (l != e || r != e) {
            rep.ok = false;
            rep.counterexample = "normalization fails at " + a.name(x);
        }
    }
    if (!rep.ok) return rep;

    std::vector<std::vector<std::pair<int, S>>> rows(n);
    for (int p = 0; p < n; ++p)
        for (int z = 0; z < n; ++z)
            if (!is_zero(sigma.at(p, z))) rows[p].emplace_back(z, sigma.at(p, z));

    std::vector<std::vector<S>> t(static_cast<std::size_t>(n) * n);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
            if (within(a.degree(y) + a.degree(z))) t[static_cast<std::size_t>(y) * n + z] = twisted_product(a, sigma, y, z);

    std::mutex mu;
    std::size_t checked = 0;
    bool failed = false;
    std::string counter;
    auto run = [&](int begin, int step) {
        std::size_t local = 0;
        for (int x = begin; x < n; x += step) {
            {
                std::lock_guard<std::mutex> lock(mu);
                if (failed) return;
            }
            for (int y = 0; y < n; ++y) {
                int dxy = a.degree(x) + a.degree(y);
                if (!within(dxy)) continue;
                std::vector<S> txy = twisted_product(a, sigma, x, y);
                std::vector<S> lhs(n);
                for (int p = 0; p < n; ++p) {
                    if (is_zero(txy[p])) continue;
                    for (const auto& [z, v] : rows[p]) lhs[z] += txy[p] * v;
                }
                for (int z = 0; z < n; ++z) {
                    if (!within(dxy + a.degree(z))) continue;
                    const std::vector<S>& tyz = t[static_cast<std::size_t>(y) * n + z];
                    S rhs{};
                    for (const auto& [p, v] : rows[x])
                        if (!is_zero(tyz[p])) rhs += v * tyz[p];
                    ++local;
                    if (lhs[z] != rhs) {
                        std::lock_guard<std::mutex> lock(mu);
                        if (!failed) {
                            failed = true;
                            counter = "(" + a.name(x) + ", " + a.name(y) + ", " + a.name(z) +
                                      "): lhs " + scalar_string(lhs[z]) + ", rhs " + scalar_string(rhs);
                        }
                        return;
                    }
                }
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        checked += local;
    };
    workers = std::max(1, workers);
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
        for (auto& th : pool) th.join();
    }
    rep.ok = !failed;
    rep.triples = checked;
    rep.counterexample = counter;
    return rep;
}

template CocycleReport verify_hopf_cocycle(const SmashAlgebra&, const SmashForm<Rational>&, int, int);
template CocycleReport verify_hopf_cocycle(const SmashAlgebra&, const SmashForm<Poly>&, int, int);

std::vector<Poly> extend_functional(const SmashAlgebra& a, const Functional& alpha) {
    std::vector<Poly> out(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        int e = a.yd().h_counit(a.h_of(i));
        if (e != 0) out[i] = alpha.c[a.b_of(i)] * Rational(e);
    }
    return out;
}

BiFunctional cohomology_act(const SmashAlgebra& a, const Functional& alpha, const SmashForm<Poly>& sigma) {
    int n = a.dim();
    std::vector<Poly> al = extend_functional(a, alpha);
    std::vector<Poly> inv = extend_functional(a, convolution_inverse(a.yd(), alpha));

    // alpha^{-1}(x3 y3) for all basis pairs.
    SmashForm<Poly> inv_prod(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly v;
            for (const auto& t : a.product(i, j))
                if (!inv[t.i].is_zero()) v += inv[t.i] * t.c;
            inv_prod.at(i, j) = v;
        }

    // For x = b # 1: sum alpha(x1) x2 (x) x3 as a map (x2, x3) -> coefficient.
    auto reduce = [&](int b) {
        std::map<std::pair<int, int>, Poly> acc;
        for (const auto& u : a.embed(b))
            for (const auto& t : a.coproduct(u.i)) {
                if (al[t.i].is_zero()) continue;
                Poly s = al[t.i] * (u.c * t.c);
                for (const auto& s2 : a.coproduct(t.j)) acc[{s2.i, s2.j}] += s * s2.c;
            }
        std::vector<std::tuple<int, int, Poly>> out;
        for (auto& [key, c] : acc)
            if (!c.is_zero()) out.emplace_back(key.first, key.second, c);
        return out;
    };
    std::vector<std::vector<std::tuple<int, int, Poly>>> red(kDim);
    for (int b = 0; b < kDim; ++b) red[b] = reduce(b);

    BiFunctional out;
    for (int b = 0; b < kDim; ++b)
        for (int c = 0; c < kDim; ++c) {
            Poly v;
            for (const auto& [x2, x3, cx] : red[b])
                for (const auto& [y2, y3, cy] : red[c]) {
                    const Poly& s = sigma.at(x2, y2);
                    if (s.is_zero()) continue;
                    const Poly& ip = inv_prod.at(x3, y3);
                    if (ip.is_zero()) continue;
                    v += cx * cy * s * ip;
                }
            out.at(b, c) = v;
        }
    return out;
}

template <class S>
DeformedProduct<S>::DeformedProduct(const SmashAlgebra& a, const SmashForm<S>& sigma, const SmashForm<S>& sigma_inv)
    : a_(&a) {
    int n = a.dim();
    // U(x, y) = x1 y1 sigma^{-1}(x2, y2).
    std::vector<std::vector<std::pair<int, S>>> u(static_cast<std::size_t>(n) * n);
    std::vector<S> acc(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::fill(acc.begin(), acc.end(), S());
            for (const auto& cx : a.coproduct(x))
                for (const auto& cy : a.coproduct(y)) {
                    const S& s = sigma_inv.at(cx.j, cy.j);
                    if (is_zero(s)) continue;
                    S sc = s * (cx.c * cy.c);
                    for (const auto& t : a.product(cx.i, cy.i)) acc[t.i] += sc * t.c;
                }
            auto& row = u[static_cast<std::size_t>(x) * n + y];
            for (int k = 0; k < n; ++k)
                if (!is_zero(acc[k])) row.emplace_back(k, acc[k]);
        }
    table_.assign(static_cast<std::size_t>(n) * n, std::vector<S>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<S>& out = table_[static_cast<std::size_t>(x) * n + y];
            for (const auto& cx : a.coproduct(x))
                for (const auto& cy : a.coproduct(y)) {
                    const S& s = sigma.at(cx.i, cy.i);
                    if (is_zero(s)) continue;
                    S sc = s * (cx.c * cy.c);
                    for (const auto& [k, c] : u[static_cast<std::size_t>(cx.j) * n + cy.j]) out[k] += sc * c;
                }
        }
}

template <class S>
std::vector<S> DeformedProduct<S>::multiply(const std::vector<S>& u, const std::vector<S>& v) const {
    int n = a_->dim();
    std::vector<S> out(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(u[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(v[j])) continue;
            S s = u[i] * v[j];
            const std::vector<S>& p = product(i, j);
            for (int k = 0; k < n; ++k)
                if (!is_zero(p[k])) out[k] += s * p[k];
        }
    }
    return out;
}

template <class S>
std::vector<S> deformed_multiply(const SmashAlgebra& a, const SmashForm<S>& sigma, const SmashForm<S>& sigma_inv,
                                 const std::vector<S>& u, const std::vector<S>& v) {
    int n = a.dim();
    std::vector<S> out(n);
    for (int x = 0; x < n; ++x) {
        if (is_zero(u[x])) continue;
        for (int y = 0; y < n; ++y) {
            if (is_zero(v[y])) continue;
            S uv = u[x] * v[y];
            for (const auto& cx : a.coproduct(x))
                for (const auto& cy : a.coproduct(y)) {
                    const S& s = sigma.at(cx.i, cy.i);
                    if (is_zero(s)) continue;
                    S s1 = uv * s * (cx.c * cy.c);
                    for (const auto& dx : a.coproduct(cx.j))
                        for (const auto& dy : a.coproduct(cy.j)) {
                            const S& si = sigma_inv.at(dx.j, dy.j);
                            if (is_zero(si)) continue;
                            S s2 = s1 * si * (dx.c * dy.c);
                            for (const auto& t : a.product(dx.i, dy.i)) out[t.i] += s2 * t.c;
                        }
                }
        }
    }
    return out;
}

template std::vector<Rational> deformed_multiply(const SmashAlgebra&, const SmashForm<Rational>&,
                                                 const SmashForm<Rational>&, const std::vector<Rational>&,
                                                 const std::vector<Rational>&);
template std::vector<Poly> deformed_multiply(const SmashAlgebra&, const SmashForm<Poly>&, const SmashForm<Poly>&,
                                             const std::vector<Poly>&, const std::vector<Poly>&);

template class DeformedProduct<Rational>;
template class DeformedProduct<Poly>;

std::string element_to_string(const SmashAlgebra& a, const std::vector<Poly>& v) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < a.dim(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << v[i].to_string() << ")*" << a.name(i);
    }
    return first ? "0" : os.str();
}

}  // namespace fk3
