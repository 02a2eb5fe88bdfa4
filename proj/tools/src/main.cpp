#include "fk3/cleft.hpp"
#include "fk3/diagnostics.hpp"
#include "fk3/hochschild.hpp"
#include "fk3/suites.hpp"
#include "fk3/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace fk3;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    bool pointed = false;
    bool copointed = false;
    int ell = 1;
    int k = 0;
    std::optional<std::string> lambda, mu, c0, c1, c2;
    bool symbolic = false;
    std::string format = "md";
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;
    bool exponential = false;
    bool mutate = false;
    std::string suite;

    RealizationKind kind() const { return copointed ? RealizationKind::Copointed : RealizationKind::Pointed; }
    bool has_numeric() const { return lambda || mu || c0 || c1 || c2; }
};

Rational rational_arg(const std::optional<std::string>& v, const char* name) {
    try {
        return parse_rational(*v);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("--") + name + " expects p/q, got '" + *v + "'");
    }
}

Realization realization_of(const RunConfig& cfg) {
    if (cfg.kind() == RealizationKind::Copointed) return Realization::copointed();
    if (cfg.ell < 1 || cfg.k < 0 || cfg.k >= cfg.ell) throw UsageError("--k must satisfy 0 <= k < ell");
    return Realization::pointed(cfg.ell, cfg.k);
}

// Numeric parameters of the chosen realization, or nullopt when none are given.
std::optional<CleftParams> numeric_params(const RunConfig& cfg) {
    if (cfg.symbolic && cfg.has_numeric()) throw UsageError("--symbolic cannot be combined with numeric parameters");
    if (!cfg.has_numeric()) return std::nullopt;
    if (cfg.kind() == RealizationKind::Pointed) {
        if (cfg.c0 || cfg.c1 || cfg.c2) throw UsageError("--c0/--c1/--c2 belong to --copointed");
        if (!cfg.lambda || !cfg.mu) throw UsageError("--pointed needs both --lambda and --mu");
        return CleftParams::pointed(rational_arg(cfg.lambda, "lambda"), rational_arg(cfg.mu, "mu"));
    }
    if (cfg.lambda || cfg.mu) throw UsageError("--lambda/--mu belong to --pointed");
    if (!cfg.c0 || !cfg.c1 || !cfg.c2) throw UsageError("--copointed needs --c0, --c1 and --c2");
    return CleftParams::copointed(rational_arg(cfg.c0, "c0"), rational_arg(cfg.c1, "c1"), rational_arg(cfg.c2, "c2"));
}

TableFormat format_of(const RunConfig& cfg) {
    try {
        return parse_table_format(cfg.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

int cmd_table(const RunConfig& cfg) {
    const TableFormat fmt = format_of(cfg);
    const Realization r = realization_of(cfg);
    if (cfg.exponential) {
        if (cfg.has_numeric()) throw UsageError("--exponential tables are symbolic in eta");
        const ContextPtr ec = r.is_pointed() ? eta_pointed_context() : eta_copointed_context();
        const Poly eta3 = Poly::var(ec, "eta3");
        HochschildForm eta;
        if (r.is_pointed())
            eta = combine({{Poly::var(ec, "eta0"), generator("xi0")}, {Poly::var(ec, "eta0"), generator("xi2")},
                           {eta3, generator("xi3")}});
        else
            eta = combine({{Poly::var(ec, "eta1"), generator("xi^1_1")}, {eta3, generator("xi3")}});
        const std::string title = std::string("e^eta, ") + r.describe() + ", eta = " +
                                  (r.is_pointed() ? "eta0 (xi0 + xi2) + eta3 xi3" : "eta1 xi^1_1 + eta3 xi3");
        emit(cfg, render_table(hochschild_exponential(r, eta), full_layout(title), fmt));
        return kExitPass;
    }
    std::optional<CleftParams> p = numeric_params(cfg);
    CleftParams params = p ? *p
                           : (r.is_pointed() ? CleftParams::pointed_symbolic() : CleftParams::copointed_symbolic());
    const std::string title = "sigma, " + r.describe() + ", " + (p ? p->describe() : std::string("symbolic"));
    BiFunctional sigma = sigma_from_section(CleftObject(params, r));
    emit(cfg, render_table(sigma, sigma_layout(r.kind, title), fmt));
    return kExitPass;
}

std::string suite_json(const std::vector<SuiteReport>& reps) {
    nlohmann::json j = nlohmann::json::array();
    for (const SuiteReport& r : reps) {
        nlohmann::json lines = nlohmann::json::array();
        for (const CheckLine& l : r.lines) lines.push_back({{"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
        j.push_back({{"suite", r.suite}, {"ok", r.ok()}, {"checks", lines}});
    }
    return j.dump(2) + "\n";
}

int cmd_verify(const RunConfig& cfg) {
    const TableFormat fmt = format_of(cfg);
    SuiteOptions opt;
    opt.ell = cfg.ell;
    opt.k = cfg.k;
    realization_of(cfg);
    opt.symbolic = cfg.symbolic;
    opt.params = numeric_params(cfg);
    opt.seed = cfg.seed;
    opt.workers = cfg.workers;
    opt.mutate = cfg.mutate;
    std::vector<std::string> names;
    if (cfg.suite == "all") names = suite_names();
    else names.push_back(cfg.suite);
    std::vector<SuiteReport> reps;
    bool ok = true;
    for (const std::string& n : names) {
        SuiteOptions o = opt;
        // Numeric parameters belong to one realization only.
        if (o.params && ((n == "theorem-a" && !o.params->is_pointed()) || (n == "theorem-b" && o.params->is_pointed())))
            o.params.reset();
        reps.push_back(run_suite(n, o));
        ok = ok && reps.back().ok();
    }
    std::string text;
    if (fmt == TableFormat::Json) text = suite_json(reps);
    else
        for (const SuiteReport& r : reps) text += render_suite(r);
    emit(cfg, text);
    return ok ? kExitPass : kExitFail;
}

// Nonzero values of a functional, "alpha(1)=1, alpha(x2*x0*x1*x0)=2".
std::string functional_text(const std::optional<Functional>& f) {
    if (!f) return "";
    std::string s;
    for (int b = 0; b < kDim; ++b)
        if (!f->c[b].is_zero()) s += (s.empty() ? "" : ", ") + ("alpha(" + basis_name(b) + ")=" + f->c[b].to_string());
    return s.empty() ? "0" : s;
}

int cmd_classify(const RunConfig& cfg) {
    if (cfg.symbolic) throw UsageError("classify needs numeric parameters; the verdict depends on them");
    std::optional<CleftParams> p = numeric_params(cfg);
    if (!p) throw UsageError("classify needs numeric parameters");
    const Realization r = realization_of(cfg);
    PurityVerdict v = classify_purity(*p, r);
    std::ostringstream out;
    if (format_of(cfg) == TableFormat::Json) {
        nlohmann::json j{{"realization", r.describe()}, {"parameters", p->describe()}, {"verdict", to_string(v.kind)}};
        if (v.kind == PurityVerdict::Kind::Exponential) {
            j["eta"] = v.eta_description;
            j["alpha"] = functional_text(v.alpha);
            j["certified"] = v.certified;
        }
        if (v.kind == PurityVerdict::Kind::Pure) j["obstruction"] = v.obstruction;
        out << j.dump(2) << "\n";
    } else {
        out << r.describe() << " " << p->describe() << ": " << to_string(v.kind);
        if (v.kind == PurityVerdict::Kind::Exponential)
            out << "\neta = " << v.eta_description << "\nalpha: " << functional_text(v.alpha)
                << "\nalpha -> sigma = e^eta: " << (v.certified ? "certified" : "NOT certified");
        if (v.kind == PurityVerdict::Kind::Pure) out << "\n" << v.obstruction;
        out << "\n";
    }
    emit(cfg, out.str());
    return v.kind == PurityVerdict::Kind::Exponential && !v.certified ? kExitFail : kExitPass;
}

int cmd_diagnostics(const RunConfig& cfg) {
    DiagnosticsReport d = run_diagnostics(cfg.seed);
    emit(cfg, render_diagnostics(d));
    return d.consistent() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact Hopf 2-cocycle computations for the Fomin-Kirillov algebra FK3", "fk3tool"};
    app.require_subcommand(1);
    app.fallthrough();

    auto* pointed = app.add_flag("--pointed", cfg.pointed, "Pointed realization over G_{3,ell} (default)");
    auto* copointed = app.add_flag("--copointed", cfg.copointed, "Copointed realization over k^{S3}");
    pointed->excludes(copointed);
    app.add_option("--ell", cfg.ell, "ell of G_{3,ell}")->check(CLI::PositiveNumber);
    app.add_option("--k", cfg.k, "degree parameter k, 0 <= k < ell")->check(CLI::NonNegativeNumber);
    app.add_option("--lambda", cfg.lambda, "lambda as p/q");
    app.add_option("--mu", cfg.mu, "mu as p/q");
    app.add_option("--c0", cfg.c0, "c0 as p/q");
    app.add_option("--c1", cfg.c1, "c1 as p/q");
    app.add_option("--c2", cfg.c2, "c2 as p/q");
    app.add_flag("--symbolic", cfg.symbolic, "Keep parameters symbolic");
    app.add_option("--format", cfg.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--seed", cfg.seed, "Seed for sampled parameter points");
    app.add_option("--workers", cfg.workers, "Worker threads for triple sweeps")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "Write to FILE instead of standard output");

    auto* table = app.add_subcommand("table", "Print the cocycle table");
    table->add_flag("--exponential", cfg.exponential, "Print the e^eta table on C instead");
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", cfg.suite, "theorem-a, theorem-b, sections, bialgebra, exponentials, cohomology, all")
        ->required()
        ->check(CLI::IsMember({"theorem-a", "theorem-b", "sections", "bialgebra", "exponentials", "cohomology", "all"}));
    verify->add_flag("--mutate", cfg.mutate, "Corrupt one structure constant (test hook)")->group("");
    auto* classify = app.add_subcommand("classify", "Decide purity of the cocycle at numeric parameters");
    auto* diagnostics = app.add_subcommand("diagnostics", "Report the computed answers to the open questions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kExitUsage);
    }

    try {
        if (table->parsed()) return cmd_table(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (classify->parsed()) return cmd_classify(cfg);
        if (diagnostics->parsed()) return cmd_diagnostics(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
