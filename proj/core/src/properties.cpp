#include "fk3/properties.hpp"

#include "fk3/fk3.hpp"
#include "fk3/hochschild.hpp"
#include "fk3/linsolve.hpp"

#include <array>
#include <map>
#include <thread>

namespace fk3 {

namespace {

using T3 = std::map<std::array<int, 3>, Rational>;
using SparseVec = std::map<int, Rational>;

void add_to(T3& m, const std::array<int, 3>& k, const Rational& c) {
    auto [it, fresh] = m.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

void add_to(SparseVec& m, int k, const Rational& c) {
    auto [it, fresh] = m.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

void fail(PropertyCheck& p, const std::string& where) {
    if (p.ok) p.detail = where;
    p.ok = false;
}

std::string triple_name(int a, int b, int c) {
    return "(" + basis_name(a) + ", " + basis_name(b) + ", " + basis_name(c) + ")";
}

}  // namespace

PropertyCheck check_associativity(const std::string& name, const AlgebraTable& t) {
    PropertyCheck p{name};
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 0; c < kDim; ++c) {
                ++p.checked;
                Element lhs = t.multiply(t.product(a, b), Element::basis(c));
                Element rhs = t.multiply(Element::basis(a), t.product(b, c));
                if (lhs != rhs) fail(p, triple_name(a, b, c));
            }
    return p;
}

std::vector<std::size_t> hilbert_series(int max_degree) {
    std::vector<LinComb> rels = fk3_quadratic_relations();
    std::vector<std::size_t> out;
    for (int n = 0; n <= max_degree; ++n) {
        std::size_t words = 1;
        for (int i = 0; i < n; ++i) words *= 3;
        if (n < 2) {
            out.push_back(words);
            continue;
        }
        auto encode = [](const Word& w) {
            std::size_t k = 0;
            for (int x : w) k = 3 * k + static_cast<std::size_t>(x);
            return k;
        };
        auto decode = [](std::size_t k, int len) {
            Word w(len);
            for (int i = len - 1; i >= 0; --i) {
                w[i] = static_cast<int>(k % 3);
                k /= 3;
            }
            return w;
        };
        RMatrix rows;
        for (const auto& rel : rels)
            for (int p = 0; p <= n - 2; ++p) {
                std::size_t np = 1, nq = 1;
                for (int i = 0; i < p; ++i) np *= 3;
                for (int i = 0; i < n - 2 - p; ++i) nq *= 3;
                for (std::size_t u = 0; u < np; ++u)
                    for (std::size_t v = 0; v < nq; ++v) {
                        RVector row(words);
                        Word pre = decode(u, p), post = decode(v, n - 2 - p);
                        for (const auto& [w, c] : rel) {
                            Word full = pre;
                            full.insert(full.end(), w.begin(), w.end());
                            full.insert(full.end(), post.begin(), post.end());
                            row[encode(full)] += c.constant_value();
                        }
                        rows.push_back(std::move(row));
                    }
            }
        out.push_back(words - matrix_rank(rows, words));
    }
    return out;
}

PropertyCheck check_braid_equation(const Realization& r) {
    const YD& yd = yd_for(r);
    PropertyCheck p{"braid equation " + r.describe()};
    auto c12 = [&](const T3& t) {
        T3 out;
        for (const auto& [k, c] : t)
            for (const auto& b : yd.braiding(k[0], k[1])) add_to(out, {b.i, b.j, k[2]}, c * b.c);
        return out;
    };
    auto c23 = [&](const T3& t) {
        T3 out;
        for (const auto& [k, c] : t)
            for (const auto& b : yd.braiding(k[1], k[2])) add_to(out, {k[0], b.i, b.j}, c * b.c);
        return out;
    };
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 0; c < kDim; ++c) {
                ++p.checked;
                T3 start{{{a, b, c}, Rational(1)}};
                if (c12(c23(c12(start))) != c23(c12(c23(start)))) fail(p, triple_name(a, b, c));
            }
    return p;
}

PropertyCheck check_coassociativity(const Realization& r) {
    const YD& yd = yd_for(r);
    PropertyCheck p{"coassociativity " + r.describe()};
    for (int b = 0; b < kDim; ++b) {
        ++p.checked;
        T3 left, right;
        for (const auto& t : yd.coproduct(b)) {
            for (const auto& u : yd.coproduct(t.i)) add_to(left, {u.i, u.j, t.j}, t.c * u.c);
            for (const auto& u : yd.coproduct(t.j)) add_to(right, {t.i, u.i, u.j}, t.c * u.c);
        }
        if (left != right) fail(p, basis_name(b));
    }
    return p;
}

PropertyCheck check_counit(const Realization& r) {
    const YD& yd = yd_for(r);
    PropertyCheck p{"counit " + r.describe()};
    for (int b = 0; b < kDim; ++b) {
        ++p.checked;
        SparseVec left, right;
        for (const auto& t : yd.coproduct(b)) {
            if (t.i == 0) add_to(left, t.j, t.c);
            if (t.j == 0) add_to(right, t.i, t.c);
        }
        SparseVec expect{{b, Rational(1)}};
        if (left != expect || right != expect) fail(p, basis_name(b));
    }
    return p;
}

PropertyCheck check_braided_multiplicativity(const Realization& r) {
    const YD& yd = yd_for(r);
    const AlgebraTable& m = fk3_table();
    PropertyCheck p{"Delta(ab) = Delta(a)Delta(b) " + r.describe()};
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
            ++p.checked;
            Tensor2 lhs = yd.coproduct(m.product(a, b));
            Tensor2 rhs = yd.braided_product(to_tensor(yd.coproduct(a)), to_tensor(yd.coproduct(b)));
            if (lhs != rhs) fail(p, "(" + basis_name(a) + ", " + basis_name(b) + ")");
        }
    return p;
}

PropertyCheck check_module_algebra(const Realization& r) {
    const YD& yd = yd_for(r);
    const AlgebraTable& m = fk3_table();
    PropertyCheck p{"module algebra " + r.describe()};
    for (int h = 0; h < yd.h_dim(); ++h)
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b) {
                ++p.checked;
                Element lhs = yd.act(h, m.product(a, b));
                Element rhs;
                for (const auto& [h1, h2] : yd.h_coproduct(h)) rhs += m.multiply(yd.act(h1, a), yd.act(h2, b));
                if (lhs != rhs) fail(p, r.h_name(h) + " on (" + basis_name(a) + ", " + basis_name(b) + ")");
            }
    return p;
}

PropertyCheck check_smash_associativity(const SmashAlgebra& a) {
    PropertyCheck p{"associativity of FK3 # H " + a.realization().describe()};
    int n = a.dim();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                ++p.checked;
                SparseVec left, right;
                for (const auto& t : a.product(x, y))
                    for (const auto& u : a.product(t.i, z)) add_to(left, u.i, t.c * u.c);
                for (const auto& t : a.product(y, z))
                    for (const auto& u : a.product(x, t.i)) add_to(right, u.i, t.c * u.c);
                if (left != right) fail(p, a.name(x) + " " + a.name(y) + " " + a.name(z));
            }
    return p;
}

PropertyCheck check_smash_coassociativity(const SmashAlgebra& a) {
    PropertyCheck p{"coassociativity of FK3 # H " + a.realization().describe()};
    for (int x = 0; x < a.dim(); ++x) {
        ++p.checked;
        T3 left, right;
        for (const auto& t : a.coproduct(x)) {
            for (const auto& u : a.coproduct(t.i)) add_to(left, {u.i, u.j, t.j}, t.c * u.c);
            for (const auto& u : a.coproduct(t.j)) add_to(right, {t.i, u.i, u.j}, t.c * u.c);
        }
        if (left != right) fail(p, a.name(x));
    }
    return p;
}

PropertyCheck check_smash_bialgebra(const SmashAlgebra& a) {
    PropertyCheck p{"Delta multiplicative on FK3 # H " + a.realization().describe()};
    using T2 = std::map<std::pair<int, int>, Rational>;
    auto add2 = [](T2& m, std::pair<int, int> k, const Rational& c) {
        auto [it, fresh] = m.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) m.erase(it);
        }
    };
    int n = a.dim();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            ++p.checked;
            T2 left, right;
            for (const auto& t : a.product(x, y))
                for (const auto& u : a.coproduct(t.i)) add2(left, {u.i, u.j}, t.c * u.c);
            for (const auto& cx : a.coproduct(x))
                for (const auto& cy : a.coproduct(y))
                    for (const auto& l : a.product(cx.i, cy.i))
                        for (const auto& r : a.product(cx.j, cy.j))
                            add2(right, {l.i, r.i}, cx.c * cy.c * l.c * r.c);
            if (left != right) fail(p, a.name(x) + " " + a.name(y));
        }
    // Delta(1) = 1 (x) 1 and epsilon multiplicative.
    T2 du, uu;
    for (const auto& u : a.unit()) {
        for (const auto& t : a.coproduct(u.i)) add2(du, {t.i, t.j}, u.c * t.c);
        for (const auto& v : a.unit()) add2(uu, {u.i, v.i}, u.c * v.c);
    }
    ++p.checked;
    if (du != uu) fail(p, "Delta(1)");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            ++p.checked;
            Rational e = 0;
            for (const auto& t : a.product(x, y)) e += t.c * a.counit(t.i);
            if (e != Rational(a.counit(x) * a.counit(y))) fail(p, "counit on " + a.name(x) + " " + a.name(y));
        }
    return p;
}

PropertyCheck check_deformed_associativity(const SmashAlgebra& a, const SmashForm<Rational>& sigma,
                                           const SmashForm<Rational>& sigma_inv, int workers) {
    PropertyCheck p{"associativity of the deformed product " + a.realization().describe()};
    DeformedProduct<Rational> dp(a, sigma, sigma_inv);
    int n = a.dim();
    std::vector<std::vector<std::pair<int, Rational>>> sp(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& v = dp.product(x, y);
            auto& row = sp[static_cast<std::size_t>(x) * n + y];
            for (int k = 0; k < n; ++k)
                if (v[k] != 0) row.emplace_back(k, v[k]);
        }
    auto prod = [&](int x, int y) -> const std::vector<std::pair<int, Rational>>& {
        return sp[static_cast<std::size_t>(x) * n + y];
    };

    workers = std::max(1, workers);
    std::vector<PropertyCheck> parts(workers);
    auto run = [&](int w) {
        PropertyCheck& q = parts[w];
        for (int x = w; x < n; x += workers)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    ++q.checked;
                    SparseVec left, right;
                    for (const auto& [t, c] : prod(x, y))
                        for (const auto& [u, d] : prod(t, z)) add_to(left, u, c * d);
                    for (const auto& [t, c] : prod(y, z))
                        for (const auto& [u, d] : prod(x, t)) add_to(right, u, c * d);
                    if (left != right) fail(q, a.name(x) + " " + a.name(y) + " " + a.name(z));
                }
    };
    std::vector<std::thread> threads;
    for (int w = 1; w < workers; ++w) threads.emplace_back(run, w);
    run(0);
    for (auto& t : threads) t.join();
    for (const auto& q : parts) {
        p.checked += q.checked;
        if (!q.ok) fail(p, q.detail);
    }
    // 1 # 1_H is the unit.
    for (int x = 0; x < n; ++x) {
        ++p.checked;
        SparseVec left, right;
        for (const auto& u : a.unit()) {
            for (const auto& [k, c] : prod(u.i, x)) add_to(left, k, u.c * c);
            for (const auto& [k, c] : prod(x, u.i)) add_to(right, k, u.c * c);
        }
        SparseVec expect{{x, Rational(1)}};
        if (left != expect || right != expect) fail(p, "unit on " + a.name(x));
    }
    return p;
}

PropertyCheck check_nilpotent_exponent(const Realization& r) {
    PropertyCheck p{"eta^{*5} = 0 " + r.describe()};
    p.checked = kDim * kDim;
    BiFunctional power = convolution_power(yd_for(r), symbolic_invariant_cocycle(r), 5);
    if (!power.is_zero()) fail(p, "nonzero fifth power");
    return p;
}

}  // namespace fk3
