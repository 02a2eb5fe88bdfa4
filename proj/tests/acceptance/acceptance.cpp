// Acceptance runner: one PASS/FAIL line per criterion, exact comparisons only.
#include "fk3/cleft.hpp"
#include "fk3/deformation.hpp"
#include "fk3/diagnostics.hpp"
#include "fk3/fk3.hpp"
#include "fk3/hochschild.hpp"
#include "fk3/properties.hpp"
#include "fk3/suites.hpp"
#include "fk3/tables.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace fk3;
using fk3::testing::load_table_fixture;
using fk3::testing::pointed_aliases;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void check(bool cond, const std::string& what) {
        ok = ok && cond;
        notes.push_back(std::string(cond ? "ok " : "FAILED ") + what);
    }
};

std::vector<Rational> no_values() { return std::vector<Rational>(kMaxVars); }

BiFunctional sigma_of(const CleftParams& p, const Realization& r) { return sigma_from_section(CleftObject(p, r)); }

BiFunctional substitute(const BiFunctional& f, const std::vector<Poly>& images) { return substitute_params(f, images); }

std::string first_difference(const BiFunctional& a, const BiFunctional& b) {
    const auto d = differences(a, b, 1);
    return d.empty() ? "" : " (" + d.front() + ")";
}

std::string count_differences(const BiFunctional& a, const BiFunctional& b) {
    return std::to_string(differences(a, b, 200).size());
}

Outcome criterion1() {
    Outcome o;
    const CleftParams p = CleftParams::pointed_symbolic();
    const BiFunctional expected =
        load_table_fixture("pointed_sigma_tables.txt", pointed_context(), pointed_aliases(), Poly(1));
    const BiFunctional sigma = sigma_of(p, realization_for(p));
    std::size_t matched = 0;
    for (int a : display_order())
        for (int b : display_order()) matched += sigma.at(a, b) == expected.at(a, b);
    o.check(matched == 121, std::to_string(matched) + "/121 entries of sigma_{lambda,mu} match" +
                                first_difference(sigma, expected));
    const auto al = pointed_aliases();
    o.check(sigma.at(9, 9) == al.at("p") && sigma.at(kTop, kTop) == al.at("q"),
            "p = " + sigma.at(9, 9).to_string() + ", q = " + sigma.at(kTop, kTop).to_string());
    return o;
}

Outcome criterion2() {
    Outcome o;
    const CleftParams p = CleftParams::copointed_symbolic();
    const BiFunctional expected = load_table_fixture("copointed_sigma_tables.txt", p.ctx, {}, Poly(1));
    const BiFunctional sigma = sigma_of(p, realization_for(p));
    std::size_t matched = 0;
    for (int a : display_order())
        for (int b : display_order()) matched += sigma.at(a, b) == expected.at(a, b);
    o.check(matched == 121, std::to_string(matched) + "/121 entries of sigma_c match" + first_difference(sigma, expected));
    o.check(sigma.at(kTop, kTop) == -(p.c[1] * p.c[0] * p.c[0] * p.c[2]),
            "sigma(top, top) = " + sigma.at(kTop, kTop).to_string());
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (const CleftParams& p : {CleftParams::pointed_symbolic(), CleftParams::copointed_symbolic()}) {
        const Realization r = realization_for(p);
        const SectionReport s = verify_section(CleftObject(p, r));
        o.check(s.colinear, r.describe() + " rho o gamma = (gamma (x) id) Delta");
        o.check(s.convolution_inverse, r.describe() + " gamma * gamma^-1 = gamma^-1 * gamma = unit o epsilon");
        o.check(s.h_linear, r.describe() + " gamma is H-linear");
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const CleftParams& p : {CleftParams::pointed_symbolic(), CleftParams::copointed_symbolic()}) {
        const Realization r = realization_for(p);
        const CleftObject e(p, r);
        const BiFunctional sigma = sigma_from_section(e);
        BiFunctional seed;
        seed.at(0, 0) = Poly(1);
        for (int i = 1; i <= 3; ++i)
            for (int b = 0; b < kDim; ++b) seed.at(i, b) = sigma.at(i, b);
        const BiFunctional dec = sigma_by_decomposition(e.yd(), seed);
        o.check(dec == sigma, r.describe() + " decomposition equals section on all 144 pairs" + first_difference(dec, sigma));
        if (p.is_pointed()) {
            const Poly m = p.mu, lb = p.lambda_bar();
            const int w = parse_basis_name("x0x1x0");
            o.check(dec.at(w, w) == m * m * m + lb * lb * lb * Rational(2) - lb * lb * m * Rational(3),
                    "sigma(x0x1x0, x0x1x0) = " + dec.at(w, w).to_string());
        }
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    const std::uint64_t seed = 20240601;
    for (const Realization& r : {Realization::pointed(1, 0), Realization::pointed(2, 0)}) {
        const SmashAlgebra a(r);
        for (const auto& [l, m] : sample_pointed(seed + r.ell, 3)) {
            const CleftParams p = CleftParams::pointed(l, m);
            const CocycleReport c = verify_hopf_cocycle(a, evaluate_form(extend_cocycle(a, sigma_of(p, r)), no_values()));
            o.check(c.ok, r.describe() + " " + p.describe() + ": " + std::to_string(c.triples) + " triples" +
                              (c.ok ? "" : ", " + c.counterexample));
        }
        const CleftParams sym = CleftParams::pointed_symbolic();
        const CocycleReport c = verify_hopf_cocycle(a, extend_cocycle(a, sigma_of(sym, r)), 6);
        o.check(c.ok, r.describe() + " symbolic, degree <= 6: " + std::to_string(c.triples) + " triples");
    }
    const Realization r = Realization::copointed();
    const SmashAlgebra a(r);
    for (const auto& c : sample_copointed(seed, 3)) {
        const CleftParams p = CleftParams::copointed(c[0], c[1], c[2]);
        const CocycleReport rep = verify_hopf_cocycle(a, evaluate_form(extend_cocycle(a, sigma_of(p, r)), no_values()));
        o.check(rep.ok, r.describe() + " " + p.describe() + ": " + std::to_string(rep.triples) + " triples");
    }
    const CleftParams sym = CleftParams::copointed_symbolic();
    const CocycleReport rep = verify_hopf_cocycle(a, extend_cocycle(a, sigma_of(sym, r)), 6);
    o.check(rep.ok, r.describe() + " symbolic, degree <= 6: " + std::to_string(rep.triples) + " triples");
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const Realization& r : {Realization::pointed(2, 0), Realization::pointed(2, 1), Realization::pointed(1, 0)}) {
        const DeformationReport d = check_deformation_relations(CleftParams::pointed_symbolic(), r);
        std::string bad;
        for (const RelationCheck& c : d.relations)
            if (!c.ok) bad += " " + c.relation;
        o.check(d.ok, r.describe() + " pointed relations" + (bad.empty() ? "" : ", mismatched:" + bad));
    }
    const DeformationReport d = check_deformation_relations(CleftParams::copointed_symbolic(), Realization::copointed());
    for (const RelationCheck& c : d.relations) {
        if (c.corrected) o.check(c.ok, "copointed " + c.relation + " holds");
        else
            o.check(c.ok, "copointed printed " + c.relation + (c.ok ? "" : ": computed " + c.computed + ", printed " + c.expected));
    }
    const bool exactly_one = d.alpha_match != "both" && d.alpha_match != "neither";
    o.check(d.alpha.has_value() && exactly_one,
            "solved map " +
                (d.alpha ? "alpha1 = " + d.alpha->first.to_string() + ", alpha2 = " + d.alpha->second.to_string()
                         : std::string("unsolved")) +
                " matches " + d.alpha_match);
    return o;
}

Outcome criterion7() {
    Outcome o;
    {
        const Realization r = Realization::pointed();
        const CleftParams p = CleftParams::pointed_symbolic();
        const Poly l = p.lambda;
        const BiFunctional diag = substitute(sigma_of(p, r), {l, l * Rational(1, 3)});
        const BiFunctional expo = hochschild_exponential(r, eta_lambda(l));
        o.check(diag == expo, "sigma_{lambda, lambda/3} = e^{eta_lambda}" + first_difference(diag, expo));
    }
    {
        const Realization r = Realization::copointed();
        const CleftParams p = CleftParams::copointed_symbolic();
        const BiFunctional sigma = sigma_of(p, r);
        for (int i = 0; i < 3; ++i) {
            const std::string d = std::to_string(i);
            std::vector<Poly> images(3, Poly(p.ctx, 0));
            images[i] = p.c[i];
            const BiFunctional axis = substitute(sigma, images);
            const BiFunctional expo = hochschild_exponential(r, combine({{p.c[i], generator("xi^" + d + "_" + d)}}));
            o.check(axis == expo, "sigma on the c" + d + " axis = e^{c xi^" + d + "_" + d + "}" + first_difference(axis, expo));
        }
    }
    {
        const ContextPtr ec = eta_pointed_context();
        const Poly e0 = Poly::var(ec, "eta0"), e3 = Poly::var(ec, "eta3");
        const BiFunctional e = hochschild_exponential(
            Realization::pointed(), combine({{e0, generator("xi0")}, {e0, generator("xi2")}, {e3, generator("xi3")}}));
        const BiFunctional f = load_table_fixture("pointed_exp_table.txt", ec, {}, Poly(1));
        o.check(e == f, "pointed e^eta table in Q[eta0, eta3] entry for entry" + first_difference(e, f));
    }
    {
        const ContextPtr ec = eta_copointed_context();
        const Poly e1 = Poly::var(ec, "eta1"), e3 = Poly::var(ec, "eta3");
        const BiFunctional e = hochschild_exponential(Realization::copointed(),
                                                      combine({{e1, generator("xi^1_1")}, {e3, generator("xi3")}}));
        const BiFunctional f = load_table_fixture("copointed_exp_table.txt", ec, {}, Poly(1));
        o.check(e == f, "copointed e^eta table in Q[eta1, eta3] entry for entry" + first_difference(e, f));
    }
    return o;
}

// Evaluated as stated; the analysis of the failing statements is recorded in
// the details.
Outcome criterion8() {
    Outcome o;
    const Realization r = Realization::pointed();
    const SmashAlgebra a(r);
    {
        const Poly l = Poly::var(pointed_context(), "lambda");
        const Poly lb = l * Rational(1, 3);
        const Functional alpha = top_functional(l * l * Rational(2, 9));
        const BiFunctional small = hochschild_exponential(r, combine({{lb, generator("xi0")}, {lb, generator("xi2")}}));
        const BiFunctional big = hochschild_exponential(r, eta_lambda(l));
        const BiFunctional stated = cohomology_act(a, alpha, extend_cocycle(a, small));
        o.check(stated == big, "alpha -> e^{(lambda/3)(xi0 + xi2)} = e^{eta_lambda} (" +
                                   count_differences(stated, big) + " entries differ" + first_difference(stated, big) + ")");
        const BiFunctional reverse = cohomology_act(a, alpha, extend_cocycle(a, big));
        o.notes.push_back(std::string("note reverse direction alpha -> e^{eta_lambda} = e^{(lambda/3)(xi0 + xi2)}: ") +
                          (reverse == small ? "holds" : "fails"));
    }
    {
        const ContextPtr ec = eta_pointed_context();
        const Poly e0 = Poly::var(ec, "eta0"), e3 = Poly::var(ec, "eta3");
        const BiFunctional full = hochschild_exponential(
            r, combine({{e0, generator("xi0")}, {e0, generator("xi2")}, {e3, generator("xi3")}}));
        const BiFunctional moved = cohomology_act(a, top_functional(e3), extend_cocycle(a, full));
        const BiFunctional stated = hochschild_exponential(r, combine({{e0, generator("xi0")}}));
        o.check(moved == stated, "alpha' -> e^{eta0(xi0 + xi2) + eta3 xi3} = e^{eta0 xi0} (" +
                                     count_differences(moved, stated) + " entries differ" + first_difference(moved, stated) + ")");
        const BiFunctional both = hochschild_exponential(r, combine({{e0, generator("xi0")}, {e0, generator("xi2")}}));
        o.notes.push_back(std::string("note alpha' -> e^{eta0(xi0 + xi2) + eta3 xi3} = e^{eta0(xi0 + xi2)}: ") +
                          (moved == both ? "holds" : "fails"));
    }
    {
        const Realization c = Realization::copointed();
        const SmashAlgebra ac(c);
        const ContextPtr ec = eta_copointed_context();
        const Poly e1 = Poly::var(ec, "eta1"), e3 = Poly::var(ec, "eta3");
        const BiFunctional full = hochschild_exponential(c, combine({{e1, generator("xi^1_1")}, {e3, generator("xi3")}}));
        const BiFunctional target = hochschild_exponential(c, combine({{e1, generator("xi^1_1")}}));
        const BiFunctional moved = cohomology_act(ac, top_functional(e3), extend_cocycle(ac, full));
        o.check(moved == target, "copointed alpha' -> e^{eta1 xi^1_1 + eta3 xi3} = e^{eta1 xi^1_1}" +
                                     first_difference(moved, target));
    }
    return o;
}

PurityVerdict::Kind theorem_a_kind(const Rational& l, const Rational& m) {
    if (l == 0 && m == 0) return PurityVerdict::Kind::Trivial;
    return 3 * m == l ? PurityVerdict::Kind::Exponential : PurityVerdict::Kind::Pure;
}

PurityVerdict::Kind theorem_b_kind(const std::array<Rational, 3>& c) {
    int nonzero = 0;
    for (const Rational& x : c) nonzero += x != 0;
    if (nonzero == 0) return PurityVerdict::Kind::Trivial;
    return nonzero == 1 ? PurityVerdict::Kind::Exponential : PurityVerdict::Kind::Pure;
}

Outcome criterion9() {
    Outcome o;
    std::vector<std::pair<Rational, Rational>> pts = sample_pointed(77, 10);
    for (const auto& [l, m] : sample_pointed(78, 10)) pts.emplace_back(l, l / 3);
    pts.emplace_back(Rational(3), Rational(1));
    pts.emplace_back(Rational(0), Rational(1, 2));
    std::size_t agree = 0, expo = 0, cert = 0;
    for (const auto& [l, m] : pts) {
        const PurityVerdict v = classify_purity(CleftParams::pointed(l, m), Realization::pointed());
        const bool good = v.kind == theorem_a_kind(l, m) && (v.kind != PurityVerdict::Kind::Exponential || v.certified);
        agree += good;
        if (v.kind == PurityVerdict::Kind::Exponential) {
            ++expo;
            cert += v.certified;
        }
    }
    o.check(agree == pts.size() && pts.size() >= 20, "pointed: " + std::to_string(agree) + "/" + std::to_string(pts.size()) +
                                                         " agree, " + std::to_string(cert) + "/" + std::to_string(expo) +
                                                         " exponential verdicts certified");

    std::vector<std::array<Rational, 3>> cs = sample_copointed(79, 10);
    std::mt19937_64 rng(80);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    for (int i = 0; i < 12; ++i) {
        std::array<Rational, 3> c{0, 0, 0};
        Rational q(num(rng), den(rng));
        q.canonicalize();
        c[i % 3] = q;
        cs.push_back(c);
    }
    agree = expo = cert = 0;
    for (const auto& c : cs) {
        const PurityVerdict v = classify_purity(CleftParams::copointed(c[0], c[1], c[2]), Realization::copointed());
        const bool good = v.kind == theorem_b_kind(c) && (v.kind != PurityVerdict::Kind::Exponential || v.certified);
        agree += good;
        if (v.kind == PurityVerdict::Kind::Exponential) {
            ++expo;
            cert += v.certified;
        }
    }
    o.check(agree == cs.size() && cs.size() >= 20, "copointed: " + std::to_string(agree) + "/" + std::to_string(cs.size()) +
                                                       " agree, " + std::to_string(cert) + "/" + std::to_string(expo) +
                                                       " exponential verdicts certified");
    return o;
}

Outcome criterion10() {
    Outcome o;
    for (const Realization& r : {Realization::pointed(), Realization::copointed()}) {
        const InvariantSpace sp = invariant_cocycles(r);
        const std::size_t want = r.is_pointed() ? 4 : 5;
        std::vector<HochschildForm> gens{bi_unit()};
        const std::vector<std::string> names = r.is_pointed() ? std::vector<std::string>{"xi0", "xi2", "xi3"}
                                                              : std::vector<std::string>{"xi^0_0", "xi^1_1", "xi^2_2", "xi3"};
        bool members = true;
        for (const std::string& n : names) {
            gens.push_back(generator(n));
            members = members && is_cocycle(gens.back()) && is_invariant(gens.back(), r);
        }
        std::vector<HochschildForm> joint = sp.basis;
        joint.insert(joint.end(), gens.begin(), gens.end());
        o.check(sp.dimension == want, r.describe() + " dimension " + std::to_string(sp.dimension));
        o.check(members && form_rank(gens) == want && form_rank(joint) == sp.dimension,
                r.describe() + " epsilon (x) epsilon and the generators form a basis");
    }
    return o;
}

Outcome criterion11() {
    Outcome o;
    for (const Realization& r : {Realization::pointed(), Realization::copointed()}) {
        const CommutationReport cr = check_commutations(r, symbolic_invariant_cocycle(r));
        const LocusReport lr = compare_with_commutation_set(r, cr.residuals);
        o.check(lr.contains_set, r.describe() + " C lies in the vanishing locus");
        o.check(lr.inside_set, r.describe() + " the vanishing locus lies in C");
    }
    struct Sample {
        Realization r;
        HochschildForm eta;
        bool in_c;
        std::string name;
    };
    const std::vector<Sample> samples{
        {Realization::pointed(), combine({{Rational(2), generator("xi0")}, {Rational(2), generator("xi2")}}), true,
         "2(xi0 + xi2)"},
        {Realization::pointed(), combine({{Rational(-5, 3), generator("xi3")}}), true, "-5/3 xi3"},
        {Realization::pointed(), combine({{1, generator("xi0")}, {1, generator("xi2")}, {1, generator("xi3")}}), false,
         "xi0 + xi2 + xi3"},
        {Realization::pointed(), combine({{1, generator("xi0")}, {Rational(2), generator("xi2")}}), false, "xi0 + 2 xi2"},
        {Realization::copointed(), combine({{Rational(7), generator("xi^2_2")}}), true, "7 xi^2_2"},
        {Realization::copointed(), combine({{Rational(1, 2), generator("xi3")}}), true, "1/2 xi3"},
        {Realization::copointed(), combine({{1, generator("xi^0_0")}, {1, generator("xi^1_1")}}), false, "xi^0_0 + xi^1_1"},
        {Realization::copointed(), combine({{1, generator("xi^1_1")}, {Rational(-1), generator("xi3")}}), false,
         "xi^1_1 - xi3"},
    };
    for (const Sample& s : samples) {
        const bool ok = check_commutations(s.r, s.eta).ok;
        o.check(ok == s.in_c, s.r.describe() + " " + s.name + (s.in_c ? " in C commutes" : " outside C fails"));
    }
    return o;
}

Outcome criterion12() {
    Outcome o;
    auto add = [&](const PropertyCheck& p, const std::string& tag) {
        o.check(p.ok, tag + p.name + " (" + std::to_string(p.checked) + " checks)" + (p.ok ? "" : ": " + p.detail));
    };
    add(check_associativity("associativity of FK3", fk3_table()), "");
    const auto hs = hilbert_series(5);
    o.check(hs == std::vector<std::size_t>{1, 3, 4, 3, 1, 0}, "Hilbert series 1,3,4,3,1");
    for (const Realization& r : {Realization::pointed(), Realization::pointed(2, 1), Realization::copointed()}) {
        // Property names carry the realization already.
        const std::string tag = r.describe() + " ";
        add(check_braid_equation(r), "");
        add(check_coassociativity(r), "");
        add(check_counit(r), "");
        add(check_braided_multiplicativity(r), "");
        add(check_module_algebra(r), "");
        add(check_nilpotent_exponent(r), "");
        const SmashAlgebra a(r);
        add(check_smash_associativity(a), "");
        add(check_smash_coassociativity(a), "");
        add(check_smash_bialgebra(a), "");
        const CleftParams sym = r.is_pointed() ? CleftParams::pointed_symbolic() : CleftParams::copointed_symbolic();
        add(check_associativity("associativity of the cleft object", CleftObject(sym, r).table()), tag);
        if (r.is_pointed() && r.ell > 1) continue;
        const CleftParams p = r.is_pointed() ? CleftParams::pointed(Rational(5, 2), Rational(-4, 3))
                                             : CleftParams::copointed(Rational(2), Rational(-1, 3), Rational(3, 4));
        const BiFunctional s = sigma_of(p, r);
        add(check_deformed_associativity(a, evaluate_form(extend_cocycle(a, s), no_values()),
                                         evaluate_form(extend_inverse(a, s), no_values())),
            p.describe() + ": ");
    }
    return o;
}

Outcome criterion13() {
    Outcome o;
    const DiagnosticsReport d1 = run_diagnostics(12345, 50);
    const DiagnosticsReport d2 = run_diagnostics(12345, 50);
    o.check(render_diagnostics(d1) == render_diagnostics(d2), "two runs produce identical reports");
    o.check(d1.consistent(), "report is internally consistent");
    o.check(d1.random_cocycles == 50 && d1.random_trials == 50,
            std::to_string(d1.random_cocycles) + "/50 random delta f pass is_cocycle");
    std::size_t disagreements = 0;
    for (const IndexFormulaReport& r : d1.index_formula) disagreements += r.disagreements.size();
    o.check(!d1.index_formula.empty(), "index formula: " + std::to_string(disagreements) + " disagreements recorded");
    o.check(d1.alpha.has_value(), "alpha <-> c: " + d1.alpha_match);
    std::size_t verdicts = 0;
    for (const MembershipCheck& m : d1.membership) {
        if (m.name != "xi2" && m.name != "xi3") continue;
        ++verdicts;
        o.notes.push_back("note " + m.name + (m.sign == CoboundarySign::Plus ? " (plus)" : " (minus)") +
                          (m.verdict.coboundary ? " in B^2" : " not in B^2"));
    }
    o.check(verdicts == 4, "B^2 verdicts for xi2 and xi3 under both signs");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"sigma_{lambda,mu} tables", criterion1},
        {"sigma_c tables", criterion2},
        {"section lemmas", criterion3},
        {"decomposition cross-derivation", criterion4},
        {"cocycle axiom", criterion5},
        {"deformed presentations", criterion6},
        {"exponential theorems", criterion7},
        {"cohomology witnesses", criterion8},
        {"purity classification", criterion9},
        {"invariant Hochschild spaces", criterion10},
        {"commutation loci", criterion11},
        {"structural properties", criterion12},
        {"diagnostics", criterion13},
    };
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << "CRITERION " << (i + 1) << " " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first;
        std::string failures;
        for (const std::string& n : o.notes)
            if (n.rfind("FAILED ", 0) == 0 || n.rfind("note ", 0) == 0) failures += " | " + n;
        if (!o.ok || verbose) line << failures;
        std::cout << line.str() << "\n";
        if (verbose) {
            for (const std::string& n : o.notes) std::cout << "    " << n << "\n";
            std::cout << "    (" << secs << " s)\n";
        }
        std::cout.flush();
        failed += !o.ok;
    }
    std::cout << "SUMMARY " << (criteria.size() - failed) << "/" << criteria.size() << " PASS\n";
    return failed == 0 ? 0 : 1;
}
