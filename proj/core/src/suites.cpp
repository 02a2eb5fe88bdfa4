#include "fk3/suites.hpp"

#include "fk3/deformation.hpp"
#include "fk3/fk3.hpp"
#include "fk3/hochschild.hpp"
#include "fk3/properties.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace fk3 {

namespace {

std::string verdict_text(const CocycleReport& r) {
    std::string s = std::to_string(r.triples) + " triples";
    if (!r.ok) s += "; first failure " + r.counterexample;
    return s;
}

BiFunctional substitute(const BiFunctional& f, const std::vector<Poly>& images) {
    BiFunctional out;
    for (std::size_t i = 0; i < f.c.size(); ++i) out.c[i] = f.c[i].substitute(images);
    return out;
}

std::string diff_text(const BiFunctional& a, const BiFunctional& b) {
    std::string s;
    for (const std::string& d : differences(a, b, 4)) s += (s.empty() ? "" : "; ") + d;
    return s;
}

void add_property(SuiteReport& rep, const std::string& prefix, const PropertyCheck& p) {
    rep.add(prefix + p.name, p.ok, std::to_string(p.checked) + " checks" + (p.ok ? "" : "; " + p.detail));
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

std::vector<Rational> no_values() { return std::vector<Rational>(kMaxVars); }

CocycleReport numeric_cocycle(const CleftParams& p, const Realization& r, int workers) {
    SmashAlgebra a(r);
    BiFunctional s = sigma_from_section(CleftObject(p, r));
    return verify_hopf_cocycle(a, evaluate_form(extend_cocycle(a, s), no_values()), -1, workers);
}

// Expected purity kind from the theorem conditions.
PurityVerdict::Kind expected_kind(const CleftParams& p) {
    if (p.is_pointed()) {
        Rational l = p.lambda.constant_value(), m = p.mu.constant_value();
        if (l == 0 && m == 0) return PurityVerdict::Kind::Trivial;
        return m * 3 == l ? PurityVerdict::Kind::Exponential : PurityVerdict::Kind::Pure;
    }
    int nonzero = 0;
    for (const Poly& ci : p.c) nonzero += ci.constant_value() != 0;
    if (nonzero == 0) return PurityVerdict::Kind::Trivial;
    return nonzero == 1 ? PurityVerdict::Kind::Exponential : PurityVerdict::Kind::Pure;
}

void classification_lines(SuiteReport& rep, const std::vector<CleftParams>& points, const Realization& r) {
    std::size_t agree = 0, exponential = 0, certified = 0;
    std::string first_bad;
    for (const CleftParams& p : points) {
        PurityVerdict v = classify_purity(p, r);
        bool ok = v.kind == expected_kind(p) && (v.kind != PurityVerdict::Kind::Exponential || v.certified);
        agree += ok;
        if (v.kind == PurityVerdict::Kind::Exponential) {
            ++exponential;
            certified += v.certified;
        }
        if (!ok && first_bad.empty()) first_bad = p.describe() + " -> " + to_string(v.kind);
    }
    std::string detail = std::to_string(agree) + "/" + std::to_string(points.size()) + " verdicts agree, " +
                         std::to_string(certified) + "/" + std::to_string(exponential) + " exponential verdicts certified";
    if (!first_bad.empty()) detail += "; first disagreement " + first_bad;
    rep.add("purity classification", agree == points.size(), detail);
}

SuiteReport suite_sections(const SuiteOptions& opt) {
    SuiteReport rep{"sections", {}};
    for (const CleftParams& p : {CleftParams::pointed_symbolic(), CleftParams::copointed_symbolic()}) {
        const Realization r = realization_for(p, opt.ell, opt.k);
        const std::string tag = r.describe() + ": ";
        CleftObject e(p, r);
        SectionReport s = verify_section(e);
        std::string fails;
        for (const std::string& f : s.failures) fails += (fails.empty() ? "" : "; ") + f;
        rep.add(tag + "section is colinear", s.colinear, fails);
        rep.add(tag + "section is convolution invertible", s.convolution_inverse, fails);
        rep.add(tag + "section is H-linear", s.h_linear, fails);
        BiFunctional sigma = sigma_from_section(e);
        rep.add(tag + "sigma is normalized", is_normalized(sigma));
        BiFunctional dec = sigma_by_decomposition(e.yd(), sigma);
        rep.add(tag + "decomposition formula reproduces sigma", dec == sigma, diff_text(dec, sigma));
    }
    return rep;
}

SuiteReport suite_theorem_a(const SuiteOptions& opt) {
    SuiteReport rep{"theorem-a", {}};
    const Realization r = Realization::pointed(opt.ell, opt.k);
    const CleftParams sym = CleftParams::pointed_symbolic();
    const ContextPtr ctx = sym.ctx;
    const Poly lambda = Poly::var(ctx, "lambda");
    SmashAlgebra a(r);
    BiFunctional sigma = sigma_from_section(CleftObject(sym, r));

    CocycleReport c6 = verify_hopf_cocycle(a, extend_cocycle(a, sigma), 6, opt.workers);
    rep.add("sigma # epsilon is a Hopf cocycle, symbolic, degree <= 6", c6.ok, verdict_text(c6));
    if (!opt.symbolic) {
        std::vector<CleftParams> pts;
        if (opt.params) pts.push_back(*opt.params);
        else
            for (auto [l, m] : sample_pointed(opt.seed, opt.samples)) pts.push_back(CleftParams::pointed(l, m));
        for (const CleftParams& p : pts) {
            CocycleReport c = numeric_cocycle(p, r, opt.workers);
            rep.add("sigma # epsilon is a Hopf cocycle at " + p.describe() + ", all triples", c.ok, verdict_text(c));
        }
    }

    DeformationReport dr = check_deformation_relations(sym, r);
    for (const RelationCheck& rc : dr.relations)
        rep.add("deformed relation " + rc.relation, rc.ok, rc.computed + " vs " + rc.expected);

    BiFunctional diag = substitute(sigma, {lambda, lambda * Rational(1, 3)});
    BiFunctional expo = hochschild_exponential(r, eta_lambda(lambda));
    rep.add("sigma_{lambda, lambda/3} = e^{eta_lambda}", diag == expo, diff_text(diag, expo));

    std::vector<CleftParams> grid;
    if (opt.params) grid.push_back(*opt.params);
    else {
        for (auto [l, m] : sample_pointed(opt.seed + 1, 12)) {
            grid.push_back(CleftParams::pointed(l, m));
            grid.push_back(CleftParams::pointed(l, l / 3));
        }
        grid.push_back(CleftParams::pointed(0, 0));
    }
    classification_lines(rep, grid, r);
    return rep;
}

SuiteReport suite_theorem_b(const SuiteOptions& opt) {
    SuiteReport rep{"theorem-b", {}};
    const Realization r = Realization::copointed();
    const CleftParams sym = CleftParams::copointed_symbolic();
    const ContextPtr ctx = sym.ctx;
    SmashAlgebra a(r);
    BiFunctional sigma = sigma_from_section(CleftObject(sym, r));

    CocycleReport c6 = verify_hopf_cocycle(a, extend_cocycle(a, sigma), 6, opt.workers);
    rep.add("sigma # epsilon is a Hopf cocycle, symbolic, degree <= 6", c6.ok, verdict_text(c6));
    if (!opt.symbolic) {
        std::vector<CleftParams> pts;
        if (opt.params) pts.push_back(*opt.params);
        else
            for (const auto& c : sample_copointed(opt.seed, opt.samples))
                pts.push_back(CleftParams::copointed(c[0], c[1], c[2]));
        for (const CleftParams& p : pts) {
            CocycleReport c = numeric_cocycle(p, r, opt.workers);
            rep.add("sigma # epsilon is a Hopf cocycle at " + p.describe() + ", all triples", c.ok, verdict_text(c));
        }
    }

    DeformationReport dr = check_deformation_relations(sym, r);
    for (const RelationCheck& rc : dr.relations) {
        if (!rc.ok && !rc.corrected) {
            // A printed relation with a known sign defect; its corrected
            // variant is checked on its own line.
            bool has_corrected = false;
            for (const RelationCheck& other : dr.relations)
                has_corrected |= other.corrected && other.relation.rfind(rc.relation + " (", 0) == 0;
            if (has_corrected) continue;
        }
        rep.add("deformed relation " + rc.relation, rc.ok, rc.computed + " vs " + rc.expected);
    }
    rep.add("alpha <-> c matches one stated map", dr.alpha_match != "both" && dr.alpha_match != "neither",
            dr.alpha_match);

    for (int i = 0; i < 3; ++i) {
        const std::string d = std::to_string(i);
        const Poly ci = Poly::var(ctx, "c" + d);
        std::vector<Poly> images(3, Poly(ctx, Rational(0)));
        images[i] = ci;
        BiFunctional axis = substitute(sigma, images);
        BiFunctional expo = hochschild_exponential(r, combine({{ci, generator("xi^" + d + "_" + d)}}));
        rep.add("sigma on the c" + d + " axis = e^{c" + d + " xi^" + d + "_" + d + "}", axis == expo,
                diff_text(axis, expo));
    }

    std::vector<CleftParams> grid;
    if (opt.params) grid.push_back(*opt.params);
    else {
        std::mt19937_64 rng(opt.seed + 1);
        for (const auto& c : sample_copointed(opt.seed + 2, 12)) grid.push_back(CleftParams::copointed(c[0], c[1], c[2]));
        for (int i = 0; i < 12; ++i) {
            std::array<Rational, 3> c{0, 0, 0};
            c[i % 3] = random_rational(rng);
            grid.push_back(CleftParams::copointed(c[0], c[1], c[2]));
        }
        grid.push_back(CleftParams::copointed(0, 0, 0));
    }
    classification_lines(rep, grid, r);
    return rep;
}

SuiteReport suite_bialgebra(const SuiteOptions& opt) {
    SuiteReport rep{"bialgebra", {}};
    if (opt.mutate) {
        AlgebraTable t = fk3_table();
        const int x1x0 = parse_basis_name("x1x0");
        t.mutable_product(1, 0) += Element::basis(x1x0);
        add_property(rep, "", check_associativity("associativity of mutated FK3", t));
        return rep;
    }
    add_property(rep, "", check_associativity("associativity of FK3", fk3_table()));
    std::vector<std::size_t> hs = hilbert_series(5);
    std::string hs_text;
    for (std::size_t d : hs) hs_text += (hs_text.empty() ? "" : ",") + std::to_string(d);
    rep.add("Hilbert series 1,3,4,3,1", hs == std::vector<std::size_t>{1, 3, 4, 3, 1, 0}, hs_text);

    std::mt19937_64 rng(opt.seed);
    for (const Realization& r : {Realization::pointed(opt.ell, opt.k), Realization::copointed()}) {
        add_property(rep, "", check_braid_equation(r));
        add_property(rep, "", check_coassociativity(r));
        add_property(rep, "", check_counit(r));
        add_property(rep, "", check_braided_multiplicativity(r));
        add_property(rep, "", check_module_algebra(r));
        add_property(rep, "", check_nilpotent_exponent(r));
        SmashAlgebra a(r);
        add_property(rep, "", check_smash_associativity(a));
        add_property(rep, "", check_smash_coassociativity(a));
        add_property(rep, "", check_smash_bialgebra(a));

        CleftParams sym = r.is_pointed() ? CleftParams::pointed_symbolic() : CleftParams::copointed_symbolic();
        add_property(rep, "", check_associativity("associativity of the cleft object " + r.describe(), CleftObject(sym, r).table()));

        CleftParams p = opt.params && opt.params->kind == r.kind ? *opt.params
                        : r.is_pointed() ? CleftParams::pointed(random_rational(rng), random_rational(rng))
                                         : CleftParams::copointed(random_rational(rng), random_rational(rng),
                                                                  random_rational(rng));
        BiFunctional sigma = sigma_from_section(CleftObject(p, r));
        PropertyCheck dp = check_deformed_associativity(a, evaluate_form(extend_cocycle(a, sigma), no_values()),
                                                        evaluate_form(extend_inverse(a, sigma), no_values()), opt.workers);
        dp.name += " at " + p.describe();
        add_property(rep, "", dp);
    }
    return rep;
}

SuiteReport suite_exponentials(const SuiteOptions& opt) {
    SuiteReport rep{"exponentials", {}};
    for (const Realization& r : {Realization::pointed(opt.ell, opt.k), Realization::copointed()}) {
        const std::string tag = r.describe() + ": ";
        InvariantSpace sp = invariant_cocycles(r);
        const std::size_t want = r.is_pointed() ? 4 : 5;
        rep.add(tag + "invariant Hochschild cocycles have dimension " + std::to_string(want), sp.dimension == want,
                "dimension " + std::to_string(sp.dimension));
        std::vector<HochschildForm> gens{bi_unit()};
        if (r.is_pointed())
            for (const char* g : {"xi0", "xi2", "xi3"}) gens.push_back(generator(g));
        else
            for (const char* g : {"xi^0_0", "xi^1_1", "xi^2_2", "xi3"}) gens.push_back(generator(g));
        bool all_in = true;
        for (const HochschildForm& g : gens) all_in = all_in && is_cocycle(g) && is_invariant(g, r);
        std::vector<HochschildForm> joint = sp.basis;
        joint.insert(joint.end(), gens.begin(), gens.end());
        rep.add(tag + "epsilon and the xi generators form a basis", all_in && form_rank(gens) == want &&
                                                                    form_rank(joint) == sp.dimension);

        HochschildForm eta = symbolic_invariant_cocycle(r);
        CommutationReport cr = check_commutations(r, eta);
        LocusReport lr = compare_with_commutation_set(r, cr.residuals);
        std::string cert;
        for (const std::string& c : lr.certificates) cert += (cert.empty() ? "" : "; ") + c;
        rep.add(tag + "commutation locus equals C", lr.equals_set(), cert);

        // e^eta on C: eta0 (xi0 + xi2) + eta3 xi3, resp. eta1 xi^1_1 + eta3 xi3.
        const ContextPtr ec = r.is_pointed() ? eta_pointed_context() : eta_copointed_context();
        const Poly eta3 = Poly::var(ec, "eta3");
        std::vector<Poly> images;
        if (r.is_pointed()) images = {Poly::var(ec, "eta0"), Poly::var(ec, "eta0"), eta3};
        else images = {Poly(ec, 0), Poly::var(ec, "eta1"), Poly(ec, 0), eta3};
        BiFunctional e = hochschild_exponential(r, substitute(eta, images));
        rep.add(tag + "e^eta(top, top) = -eta3^2 on C", e.at(kTop, kTop) == -(eta3 * eta3), e.at(kTop, kTop).to_string());

        std::vector<std::pair<std::string, std::pair<HochschildForm, bool>>> cases;
        if (r.is_pointed()) {
            cases.push_back({"eta_lambda at lambda=3", {eta_lambda(Poly(3)), true}});
            cases.push_back({"xi0", {generator("xi0"), false}});
            cases.push_back({"xi0 + xi2", {combine({{1, generator("xi0")}, {1, generator("xi2")}}), true}});
        } else {
            cases.push_back({"xi^1_1", {generator("xi^1_1"), true}});
            cases.push_back({"xi^0_0 + xi^1_1", {combine({{1, generator("xi^0_0")}, {1, generator("xi^1_1")}}), false}});
        }
        for (const auto& [name, c] : cases) {
            CocycleReport h = exponential_is_hopf(r, c.first, -1, opt.workers);
            rep.add(tag + "e^{" + name + "} is a Hopf cocycle: " + (c.second ? "yes" : "no"), h.ok == c.second,
                    verdict_text(h));
        }
    }
    return rep;
}

SuiteReport suite_cohomology(const SuiteOptions& opt) {
    SuiteReport rep{"cohomology", {}};
    {
        const Realization r = Realization::pointed(opt.ell, opt.k);
        SmashAlgebra a(r);
        const Poly lambda = Poly::var(pointed_context(), "lambda");
        const Poly lb = lambda * Rational(1, 3);
        BiFunctional from = hochschild_exponential(r, eta_lambda(lambda));
        BiFunctional to = hochschild_exponential(r, combine({{lb, generator("xi0")}, {lb, generator("xi2")}}));
        BiFunctional acted = cohomology_act(a, top_functional(lb * lb * Rational(2)), extend_cocycle(a, from));
        rep.add("alpha(top) = 2 lambda^2/9: alpha -> e^{eta_lambda} = e^{lambda/3 (xi0 + xi2)}", acted == to,
                diff_text(acted, to));

        const ContextPtr ec = eta_pointed_context();
        const Poly e0 = Poly::var(ec, "eta0"), e3 = Poly::var(ec, "eta3");
        BiFunctional full = hochschild_exponential(
            r, combine({{e0, generator("xi0")}, {e0, generator("xi2")}, {e3, generator("xi3")}}));
        BiFunctional target = hochschild_exponential(r, combine({{e0, generator("xi0")}, {e0, generator("xi2")}}));
        BiFunctional moved = cohomology_act(a, top_functional(e3), extend_cocycle(a, full));
        rep.add("alpha'(top) = eta3: alpha' -> e^{eta0 (xi0 + xi2) + eta3 xi3} = e^{eta0 (xi0 + xi2)}",
                moved == target, diff_text(moved, target));
    }
    {
        const Realization r = Realization::copointed();
        SmashAlgebra a(r);
        const ContextPtr ec = eta_copointed_context();
        const Poly e1 = Poly::var(ec, "eta1"), e3 = Poly::var(ec, "eta3");
        BiFunctional full = hochschild_exponential(r, combine({{e1, generator("xi^1_1")}, {e3, generator("xi3")}}));
        BiFunctional target = hochschild_exponential(r, combine({{e1, generator("xi^1_1")}}));
        BiFunctional moved = cohomology_act(a, top_functional(e3), extend_cocycle(a, full));
        rep.add("alpha'(top) = eta3: alpha' -> e^{eta1 xi^1_1 + eta3 xi3} = e^{eta1 xi^1_1}", moved == target,
                diff_text(moved, target));
    }
    for (CoboundarySign s : {CoboundarySign::Plus, CoboundarySign::Minus}) {
        CoboundaryVerdict v = is_coboundary(generator("xi3"), s);
        bool verified = v.witness && coboundary(*v.witness, s) == generator("xi3");
        rep.add(std::string("xi3 is a coboundary (") + (s == CoboundarySign::Plus ? "plus" : "minus") + " sign)",
                v.coboundary && verified,
                "rank " + std::to_string(v.rank) + ", augmented " + std::to_string(v.augmented_rank));
    }
    return rep;
}

}  // namespace

bool SuiteReport::ok() const {
    for (const CheckLine& l : lines)
        if (!l.ok) return false;
    return true;
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
    lines.push_back({std::move(name), ok, std::move(detail)});
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem-a", "theorem-b",   "sections",
                                                "bialgebra", "exponentials", "cohomology"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "theorem-a") return suite_theorem_a(opt);
    if (name == "theorem-b") return suite_theorem_b(opt);
    if (name == "sections") return suite_sections(opt);
    if (name == "bialgebra") return suite_bialgebra(opt);
    if (name == "exponentials") return suite_exponentials(opt);
    if (name == "cohomology") return suite_cohomology(opt);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::pair<Rational, Rational>> sample_pointed(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i < n; ++i) {
        Rational l = random_rational(rng);
        Rational m = random_rational(rng);
        out.emplace_back(l, m);
    }
    return out;
}

std::vector<std::array<Rational, 3>> sample_copointed(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::vector<std::array<Rational, 3>> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::array<Rational, 3> c;
        for (Rational& x : c) x = random_rational(rng);
        out.push_back(c);
    }
    return out;
}

BiFunctional eta_lambda(const Poly& lambda) {
    const Poly lb = lambda * Rational(1, 3);
    return combine({{lb, generator("xi0")}, {lb, generator("xi2")}, {lb * lb * Rational(2), generator("xi3")}});
}

BiFunctional combine(const std::vector<std::pair<Poly, BiFunctional>>& terms) {
    BiFunctional out;
    for (const auto& [coef, f] : terms)
        for (std::size_t i = 0; i < f.c.size(); ++i)
            if (!f.c[i].is_zero()) out.c[i] += f.c[i] * coef;
    return out;
}

std::string render_suite(const SuiteReport& r) {
    std::ostringstream out;
    out << "## " << r.suite << "\n";
    for (const CheckLine& l : r.lines) {
        out << (l.ok ? "PASS " : "FAIL ") << l.name;
        if (!l.detail.empty()) out << " [" << l.detail << "]";
        out << "\n";
    }
    out << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace fk3
