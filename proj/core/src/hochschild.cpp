#include "fk3/hochschild.hpp"

#include "fk3/fk3.hpp"
#include "fk3/linsolve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fk3 {

namespace {

int idx(const char* name) { return parse_basis_name(name); }

RVector form_vector(const HochschildForm& f) {
    RVector v(kDim * kDim);
    for (int i = 0; i < kDim * kDim; ++i)
        if (!f.c[i].is_zero()) v[i] = f.c[i].constant_value();
    return v;
}

bool all_constant(const BiFunctional& f) {
    for (const auto& p : f.c)
        if (!p.is_constant()) return false;
    return true;
}

TripleForm difference(const TripleForm& a, const TripleForm& b) {
    TripleForm out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
    return out;
}

// p divided by its leading coefficient.
Poly monic(const Poly& p) { return p * (Rational(1) / p.terms().front().second); }

}  // namespace

const std::vector<std::pair<int, int>>& xi3_plus_support() {
    static const std::vector<std::pair<int, int>> s = {{idx("x1"), idx("x2x0x2")},
                                                       {idx("x2"), idx("x0x1x0")},
                                                       {idx("x2x0"), idx("x1x0")},
                                                       {idx("x1x0"), idx("x2x0")},
                                                       {idx("x2x0x1"), idx("x0")}};
    return s;
}

const std::vector<std::pair<int, int>>& xi3_minus_support() {
    static const std::vector<std::pair<int, int>> s = {{idx("x0"), idx("x2x0x1")},
                                                       {idx("x0x2"), idx("x0x1")},
                                                       {idx("x0x1"), idx("x0x2")},
                                                       {idx("x0x1x0"), idx("x2")},
                                                       {idx("x2x0x2"), idx("x1")}};
    return s;
}

HochschildForm generator(const std::string& name) {
    HochschildForm f;
    if (name == "xi0" || name == "xi2") {
        bool diag = name == "xi0";
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if ((i == j) == diag) f.at(1 + i, 1 + j) = Poly(1);
        return f;
    }
    if (name == "xi3") {
        for (const auto& [a, b] : xi3_plus_support()) f.at(a, b) = Poly(1);
        for (const auto& [a, b] : xi3_minus_support()) f.at(a, b) = Poly(-1);
        return f;
    }
    if (name.size() == 6 && name.compare(0, 3, "xi^") == 0 && name[4] == '_') {
        int i = name[3] - '0', j = name[5] - '0';
        if (i >= 0 && i < 3 && j >= 0 && j < 3) {
            f.at(1 + i, 1 + j) = Poly(1);
            return f;
        }
    }
    throw std::invalid_argument("unknown Hochschild generator: " + name);
}

bool is_cocycle(const HochschildForm& eta) {
    const AlgebraTable& m = fk3_table();
    for (int a = 1; a < kDim; ++a)
        if (!eta.at(a, 0).is_zero() || !eta.at(0, a).is_zero()) return false;
    for (int a = 1; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 1; c < kDim; ++c) {
                Poly lhs = evaluate(eta, Element::basis(a), m.product(b, c));
                Poly rhs = evaluate(eta, m.product(a, b), Element::basis(c));
                if (lhs != rhs) return false;
            }
    return true;
}

bool is_invariant(const HochschildForm& eta, const Realization& r) {
    const YD& yd = yd_for(r);
    for (int h = 0; h < yd.h_dim(); ++h)
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b) {
                Poly v;
                for (const auto& [h1, h2] : yd.h_coproduct(h)) v += evaluate(eta, yd.act(h1, a), yd.act(h2, b));
                if (v != eta.at(a, b) * Rational(yd.h_counit(h))) return false;
            }
    return true;
}

InvariantSpace invariant_cocycles(const Realization& r) {
    const AlgebraTable& m = fk3_table();
    const YD& yd = yd_for(r);
    auto var = [](int a, int b) { return static_cast<std::size_t>(a * kDim + b); };
    const std::size_t n = kDim * kDim;
    RMatrix rows;
    auto unit_row = [&](std::size_t k) {
        RVector row(n);
        row[k] = 1;
        rows.push_back(row);
    };
    for (int a = 1; a < kDim; ++a) {
        unit_row(var(a, 0));
        unit_row(var(0, a));
    }
    for (int a = 1; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 1; c < kDim; ++c) {
                RVector row(n);
                for (const auto& [p, cp] : constant_terms(m.product(b, c))) row[var(a, p)] += cp;
                for (const auto& [p, cp] : constant_terms(m.product(a, b))) row[var(p, c)] -= cp;
                rows.push_back(std::move(row));
            }
    for (int h = 0; h < yd.h_dim(); ++h)
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b) {
                RVector row(n);
                for (const auto& [h1, h2] : yd.h_coproduct(h))
                    for (const auto& [p, cp] : constant_terms(yd.act(h1, a)))
                        for (const auto& [q, cq] : constant_terms(yd.act(h2, b))) row[var(p, q)] += cp * cq;
                row[var(a, b)] -= yd.h_counit(h);
                rows.push_back(std::move(row));
            }
    InvariantSpace out;
    for (const auto& v : nullspace(rows, n)) {
        HochschildForm f;
        for (std::size_t k = 0; k < n; ++k)
            if (v[k] != 0) f.c[k] = Poly(v[k]);
        out.basis.push_back(f);
    }
    out.dimension = out.basis.size();
    return out;
}

std::size_t form_rank(const std::vector<HochschildForm>& forms) {
    RMatrix rows;
    for (const auto& f : forms) rows.push_back(form_vector(f));
    return matrix_rank(rows, kDim * kDim);
}

HochschildForm coboundary(const Functional& f, CoboundarySign sign) {
    const AlgebraTable& m = fk3_table();
    Rational s = sign == CoboundarySign::Plus ? 1 : -1;
    HochschildForm out;
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
            Poly v = -evaluate(f, m.product(a, b));
            if (a == 0) v += f.c[b];
            if (b == 0) v += f.c[a];
            out.at(a, b) = v * s;
        }
    return out;
}

CoboundaryVerdict is_coboundary(const HochschildForm& eta, CoboundarySign sign) {
    if (!all_constant(eta)) throw std::invalid_argument("is_coboundary needs a form with rational values");
    const AlgebraTable& m = fk3_table();
    Rational s = sign == CoboundarySign::Plus ? 1 : -1;
    RMatrix a;
    RVector rhs = form_vector(eta);
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y) {
            RVector row(kDim);
            for (const auto& [p, cp] : constant_terms(m.product(x, y))) row[p] -= cp;
            if (x == 0) row[y] += 1;
            if (y == 0) row[x] += 1;
            for (auto& v : row) v *= s;
            a.push_back(std::move(row));
        }
    RMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);

    CoboundaryVerdict out;
    out.rank = matrix_rank(a, kDim);
    out.augmented_rank = matrix_rank(aug, kDim + 1);
    SolveResult<Rational> sol = solve_linear(a, rhs, kDim);
    out.coboundary = sol.kind != SolutionKind::Inconsistent;
    if (out.coboundary) {
        Functional f;
        for (int i = 0; i < kDim; ++i)
            if (sol.particular[i] != 0) f.c[i] = Poly(sol.particular[i]);
        out.witness = f;
    }
    return out;
}

BiFunctional hochschild_exponential(const Realization& r, const HochschildForm& eta) {
    return exponential(yd_for(r), eta);
}

CommutationReport check_commutations(const Realization& r, const HochschildForm& eta) {
    const YD& yd = yd_for(r);
    TripleForm f1 = compose_id_m(eta), g1 = eps_tensor(eta);
    TripleForm f2 = compose_m_id(eta), g2 = tensor_eps(eta);
    TripleForm c1 = difference(convolve3(yd, f1, g1), convolve3(yd, g1, f1));
    TripleForm c2 = difference(convolve3(yd, f2, g2), convolve3(yd, g2, f2));

    CommutationReport out;
    std::set<std::string> seen;
    for (const TripleForm* c : {&c1, &c2})
        for (const auto& p : c->c) {
            if (p.is_zero()) continue;
            ++out.nonzero_entries;
            Poly q = monic(p);
            if (seen.insert(q.to_string()).second) out.residuals.push_back(q);
        }
    out.ok = out.nonzero_entries == 0;
    return out;
}

std::vector<std::vector<Poly>> commutation_set_components(const Realization& r) {
    std::vector<std::vector<Poly>> out;
    if (r.is_pointed()) {
        ContextPtr ctx = eta_pointed_context();
        Poly e0 = Poly::var(ctx, "eta0"), e3 = Poly::var(ctx, "eta3"), zero(ctx, 0);
        out.push_back({e0, e0, zero});
        out.push_back({zero, zero, e3});
        return out;
    }
    ContextPtr ctx = eta_copointed_context();
    for (int k = 0; k < 4; ++k) {
        std::vector<Poly> images(4, Poly(ctx, 0));
        images[k] = Poly::var(ctx, k);
        out.push_back(images);
    }
    return out;
}

std::vector<Poly> commutation_set_equations(const Realization& r) {
    if (r.is_pointed()) {
        ContextPtr ctx = eta_pointed_context();
        Poly e0 = Poly::var(ctx, "eta0"), e2 = Poly::var(ctx, "eta2"), e3 = Poly::var(ctx, "eta3");
        return {e0 - e2, e0 * e3};
    }
    ContextPtr ctx = eta_copointed_context();
    std::vector<Poly> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) out.push_back(Poly::var(ctx, i) * Poly::var(ctx, j));
    return out;
}

bool in_ideal(const Poly& g, const std::vector<Poly>& gens, int max_degree) {
    if (g.is_zero()) return true;
    if (gens.empty()) return false;
    ContextPtr ctx = g.context() ? g.context() : gens.front().context();
    int nv = ctx ? static_cast<int>(ctx->size()) : 0;
    int top = std::max(g.total_degree(), max_degree);
    // Monomials of degree <= d as polynomials.
    std::vector<Poly> monos{Poly(ctx, 1)};
    for (int d = 1; d <= top; ++d) {
        std::vector<Poly> next;
        std::set<std::string> seen;
        for (const auto& m : monos)
            for (int v = 0; v < nv; ++v) {
                Poly q = m * Poly::var(ctx, v);
                if (q.total_degree() == d && seen.insert(q.to_string()).second) next.push_back(q);
            }
        monos.insert(monos.end(), next.begin(), next.end());
    }
    std::map<Mono, std::size_t> column;
    auto col = [&](Mono m) { return column.emplace(m, column.size()).first->second; };
    std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_rows;
    for (const auto& r : gens)
        for (const auto& m : monos) {
            if (r.total_degree() + m.total_degree() > top) continue;
            std::vector<std::pair<std::size_t, Rational>> row;
            Poly prod = m * r;
            for (const auto& [mono, c] : prod.terms()) row.emplace_back(col(mono), c);
            sparse_rows.push_back(std::move(row));
        }
    std::vector<std::pair<std::size_t, Rational>> target;
    for (const auto& [mono, c] : g.terms()) target.emplace_back(col(mono), c);
    std::size_t n = column.size();
    RMatrix rows;
    for (const auto& sr : sparse_rows) {
        RVector row(n);
        for (const auto& [k, c] : sr) row[k] = c;
        rows.push_back(std::move(row));
    }
    RVector v(n);
    for (const auto& [k, c] : target) v[k] = c;
    return in_row_space(rows, v, n);
}

LocusReport compare_with_commutation_set(const Realization& r, const std::vector<Poly>& residuals) {
    LocusReport out;
    for (const auto& images : commutation_set_components(r))
        for (const auto& p : residuals)
            if (!p.substitute(images).is_zero()) {
                out.contains_set = false;
                out.certificates.push_back("residual " + p.to_string() + " does not vanish on a component");
            }
    for (const auto& g : commutation_set_equations(r)) {
        bool found = false;
        Poly power = g;
        for (int k = 1; k <= 4 && !found; ++k, power = power * g) {
            int bound = 0;
            for (const auto& p : residuals) bound = std::max(bound, p.total_degree());
            if (in_ideal(power, residuals, std::max(bound, power.total_degree()))) {
                found = true;
                out.certificates.push_back("(" + g.to_string() + ")^" + std::to_string(k) + " in residual ideal");
            }
        }
        if (!found) {
            out.inside_set = false;
            out.certificates.push_back("no power of " + g.to_string() + " up to 4 found in residual ideal");
        }
    }
    return out;
}

CocycleReport exponential_is_hopf(const Realization& r, const HochschildForm& eta, int max_degree, int workers) {
    BiFunctional e = hochschild_exponential(r, eta);
    SmashAlgebra a(r);
    SmashForm<Poly> s = extend_cocycle(a, e);
    if (all_constant(e)) {
        std::vector<Rational> none(kMaxVars);
        return verify_hopf_cocycle(a, evaluate_form(s, none), max_degree < 0 ? -1 : max_degree, workers);
    }
    return verify_hopf_cocycle(a, s, max_degree == -2 ? 6 : max_degree, workers);
}

HochschildForm symbolic_invariant_cocycle(const Realization& r) {
    HochschildForm out;
    auto add = [&](const HochschildForm& g, const Poly& coef) {
        for (int i = 0; i < kDim * kDim; ++i)
            if (!g.c[i].is_zero()) out.c[i] += g.c[i] * coef;
    };
    if (r.is_pointed()) {
        ContextPtr ctx = eta_pointed_context();
        add(generator("xi0"), Poly::var(ctx, "eta0"));
        add(generator("xi2"), Poly::var(ctx, "eta2"));
        add(generator("xi3"), Poly::var(ctx, "eta3"));
    } else {
        ContextPtr ctx = eta_copointed_context();
        for (int i = 0; i < 3; ++i) {
            std::string d = std::to_string(i);
            add(generator("xi^" + d + "_" + d), Poly::var(ctx, "eta" + d));
        }
        add(generator("xi3"), Poly::var(ctx, "eta3"));
    }
    return out;
}

Functional top_functional(const Poly& top_value) {
    Functional f = counit_functional();
    f.c[kTop] = top_value;
    return f;
}

const char* to_string(PurityVerdict::Kind k) {
    switch (k) {
        case PurityVerdict::Kind::Trivial: return "Trivial";
        case PurityVerdict::Kind::Exponential: return "Exponential";
        case PurityVerdict::Kind::Pure: return "Pure";
    }
    return "?";
}

PurityVerdict classify_purity(const CleftParams& p, const Realization& r) {
    if (p.is_symbolic()) throw std::invalid_argument("classify_purity needs numeric parameters");
    PurityVerdict out;
    BiFunctional sigma = sigma_from_section(CleftObject(p, r));
    if (sigma == bi_unit()) {
        out.kind = PurityVerdict::Kind::Trivial;
        return out;
    }
    auto val = [&](const char* a, const char* b) { return sigma.at(idx(a), idx(b)).constant_term(); };
    // alpha(x_i) = 0 forces eta = sigma on degree-one pairs; eta3 is read at
    // (x1, x2x0x2) so that alpha vanishes at the top word as well.
    Rational eta3 = val("x1", "x2x0x2");
    HochschildForm eta;
    auto add = [&](const std::string& g, const Rational& coef) {
        HochschildForm f = generator(g);
        for (int i = 0; i < kDim * kDim; ++i)
            if (!f.c[i].is_zero()) eta.c[i] += f.c[i] * coef;
    };
    if (r.is_pointed()) {
        Rational e0 = val("x0", "x0"), e2 = val("x0", "x1");
        if (e0 != e2) {
            out.kind = PurityVerdict::Kind::Pure;
            out.obstruction = "alpha(x_i) = 0 forces eta0 = sigma(x0,x0) = " + e0.get_str() +
                              " and eta2 = sigma(x0,x1) = " + e2.get_str() +
                              "; e^eta is a Hopf cocycle only if eta0 = eta2";
            return out;
        }
        add("xi0", e0);
        add("xi2", e0);
        add("xi3", eta3);
        out.eta_description = e0.get_str() + "*(xi0+xi2) + " + eta3.get_str() + "*xi3";
    } else {
        std::array<Rational, 3> e{val("x0", "x0"), val("x1", "x1"), val("x2", "x2")};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (e[i] * e[j] != 0) {
                    out.kind = PurityVerdict::Kind::Pure;
                    out.obstruction = "alpha(x_i) = 0 forces eta_i = sigma(x_i,x_i); eta" + std::to_string(i) +
                                      " = " + e[i].get_str() + " and eta" + std::to_string(j) + " = " +
                                      e[j].get_str() + " but e^eta is a Hopf cocycle only if eta_i eta_j = 0";
                    return out;
                }
        std::string desc;
        for (int i = 0; i < 3; ++i)
            if (e[i] != 0) {
                std::string d = std::to_string(i);
                add("xi^" + d + "_" + d, e[i]);
                desc = e[i].get_str() + "*xi^" + d + "_" + d + " + ";
            }
        add("xi3", eta3);
        out.eta_description = desc + eta3.get_str() + "*xi3";
    }
    Functional alpha = counit_functional();
    SmashAlgebra a(r);
    BiFunctional acted = cohomology_act(a, alpha, extend_cocycle(a, sigma));
    out.kind = PurityVerdict::Kind::Exponential;
    out.certified = acted == hochschild_exponential(r, eta);
    out.eta = eta;
    out.alpha = alpha;
    return out;
}

}  // namespace fk3
