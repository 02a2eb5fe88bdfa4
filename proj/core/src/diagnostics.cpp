#include "fk3/diagnostics.hpp"

#include "fk3/deformation.hpp"
#include "fk3/groups.hpp"

#include <sstream>

namespace fk3 {

namespace {

const char* sign_name(CoboundarySign s) { return s == CoboundarySign::Plus ? "plus" : "minus"; }

constexpr CoboundarySign kSigns[] = {CoboundarySign::Plus, CoboundarySign::Minus};

}  // namespace

IndexFormulaReport index_formula_diagnostic(int ell, int k) {
    IndexFormulaReport rep;
    rep.ell = ell;
    rep.k = k;
    for (int j = 0; j < 3; ++j)
        for (int r = 0; r < 2 * ell; ++r)
            for (int i = 0; i < 3; ++i) {
                ++rep.checked;
                const int conj = conj_index(DihedralLikeElt::make(j, r, ell), i, k);
                const int shown = displayed_index_formula(j, r, i, k);
                if (conj != shown) rep.disagreements.push_back({j, r, i, conj, shown});
            }
    return rep;
}

Functional stated_f2() {
    Functional f;
    for (const char* w : {"x2x0", "x0x2", "x1x0", "x0x1"}) f.c[parse_basis_name(w)] = Poly(-1);
    return f;
}

Functional stated_f3() {
    Functional f;
    f.c[kTop] = Poly(-1);
    return f;
}

Functional random_functional(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    Functional f;
    for (int b = 1; b < kDim; ++b) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        f.c[b] = Poly(q);
    }
    return f;
}

bool DiagnosticsReport::consistent() const {
    if (random_cocycles != random_trials) return false;
    if (alpha_match != "alpha1=c0-c2, alpha2=c0-c1" && alpha_match != "alpha1=c0-c1, alpha2=c0-c2") return false;
    for (const MembershipCheck& m : membership) {
        if (m.verdict.coboundary != m.witness_verified) return false;
        if (m.verdict.coboundary != (m.verdict.rank == m.verdict.augmented_rank)) return false;
    }
    for (const WitnessCheck& w : witnesses) {
        if (!w.equals_target) continue;
        const std::string target = w.name.substr(w.name.find("-> ") + 3);
        for (const MembershipCheck& m : membership)
            if (m.name == target && m.sign == w.sign && !m.verdict.coboundary) return false;
    }
    return true;
}

DiagnosticsReport run_diagnostics(std::uint64_t seed, std::size_t trials) {
    DiagnosticsReport d;
    for (int ell : {1, 2})
        for (int k = 0; k < ell; ++k) d.index_formula.push_back(index_formula_diagnostic(ell, k));

    const CleftParams cp = CleftParams::copointed_symbolic();
    const DeformationReport dr = check_deformation_relations(cp, realization_for(cp));
    d.alpha = dr.alpha;
    d.alpha_match = dr.alpha_match;

    const std::pair<const char*, std::pair<Functional, const char*>> stated[] = {
        {"f2 -> xi2", {stated_f2(), "xi2"}}, {"f3 -> xi3", {stated_f3(), "xi3"}}};
    for (const auto& [name, fw] : stated) {
        const HochschildForm target = generator(fw.second);
        for (CoboundarySign s : kSigns) {
            WitnessCheck w;
            w.name = name;
            w.sign = s;
            const HochschildForm df = coboundary(fw.first, s);
            w.equals_target = df == target;
            w.differences = differences(df, target, 16);
            d.witnesses.push_back(std::move(w));
        }
    }
    for (const char* name : {"xi0", "xi2", "xi3"}) {
        const HochschildForm target = generator(name);
        for (CoboundarySign s : kSigns) {
            MembershipCheck m;
            m.name = name;
            m.sign = s;
            m.verdict = is_coboundary(target, s);
            m.witness_verified = m.verdict.witness && coboundary(*m.verdict.witness, s) == target;
            d.membership.push_back(std::move(m));
        }
    }

    d.seed = seed;
    d.random_trials = trials;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const Functional f = random_functional(rng);
        if (is_cocycle(coboundary(f, CoboundarySign::Plus)) && is_cocycle(coboundary(f, CoboundarySign::Minus)))
            ++d.random_cocycles;
    }
    return d;
}

std::string render_diagnostics(const DiagnosticsReport& d) {
    std::ostringstream out;
    out << "# index formula j - r*i - k + 1 (mod 3) against conjugation\n";
    for (const IndexFormulaReport& r : d.index_formula) {
        out << "ell=" << r.ell << " k=" << r.k << ": " << r.disagreements.size() << " of " << r.checked
            << " triples (j, r, i) disagree\n";
        for (const IndexFormulaDisagreement& x : r.disagreements)
            out << "  (" << x.j << ", " << x.r << ", " << x.i << "): conjugation " << x.conjugation << ", formula "
                << x.displayed << "\n";
    }
    out << "\n# alpha <-> c\n";
    if (d.alpha)
        out << "alpha1 = " << d.alpha->first.to_string() << ", alpha2 = " << d.alpha->second.to_string() << "\n";
    else
        out << "alpha not solved\n";
    out << "matches: " << d.alpha_match << "\n";

    out << "\n# stated coboundary witnesses\n";
    for (const WitnessCheck& w : d.witnesses) {
        out << w.name << " (" << sign_name(w.sign) << "): " << (w.equals_target ? "equal" : "not equal") << "\n";
        for (const std::string& s : w.differences) out << "  " << s << "\n";
    }
    out << "\n# B^2 membership by linear solve\n";
    for (const MembershipCheck& m : d.membership) {
        out << m.name << " (" << sign_name(m.sign) << "): " << (m.verdict.coboundary ? "coboundary" : "not a coboundary")
            << ", rank " << m.verdict.rank << ", augmented rank " << m.verdict.augmented_rank;
        if (m.verdict.witness) {
            out << ", witness f =";
            bool any = false;
            for (int b = 0; b < kDim; ++b)
                if (!m.verdict.witness->c[b].is_zero()) {
                    out << " f(" << basis_name(b) << ")=" << m.verdict.witness->c[b].to_string();
                    any = true;
                }
            if (!any) out << " 0";
            out << (m.witness_verified ? " (verified)" : " (NOT verified)");
        }
        out << "\n";
    }
    out << "\n# delta f is a cocycle for random f (seed " << d.seed << ")\n";
    out << d.random_cocycles << " of " << d.random_trials << "\n";
    out << "\nconsistent: " << (d.consistent() ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace fk3
