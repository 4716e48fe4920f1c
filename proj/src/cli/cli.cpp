#include "rsusy/cli/cli.hpp"

#include "rsusy/cli/suites.hpp"
#include "rsusy/gegenbauer/gegenbauer.hpp"
#include "rsusy/jacobi/little_jacobi.hpp"
#include "rsusy/report/serialize.hpp"
#include "rsusy/susyqm/spectra.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <sstream>

namespace rsusy {

namespace {

struct Options {
    RunConfig cfg;
    std::string kind = "jacobi-m1";
    std::string system = "scarf";
    std::string suite = "all";
    std::string variant;
    std::string alpha, beta, mu;
    std::string grids;
    int levels = 3;
    double tol = 0.0;
};

Rational param(const std::string& s, const char* fallback) { return Rational::parse(s.empty() ? fallback : s); }

std::vector<int> parse_grids(const std::string& s) {
    std::vector<int> g;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 4) throw InvalidParams("bad grid size '" + item + "'");
        g.push_back(v);
    }
    return g;
}

std::optional<Variant> parse_variant(const std::string& s) {
    if (s.empty() || s == "both") return std::nullopt;
    if (s == "printed") return Variant::printed;
    if (s == "corrected") return Variant::corrected;
    throw InvalidParams("unknown variant '" + s + "'");
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
    if (cfg.output.empty())
        out << content;
    else
        write_atomic(cfg.output, content);
}

int cmd_family(Options& o, std::ostream& out) {
    auto& cfg = o.cfg;
    if (cfg.degree < 0) throw InvalidParams("degree must be >= 0");
    FamilyReport rep;
    if (o.kind == "jacobi-m1") {
        const Jacobi1Params p{param(o.alpha, "0"), param(o.beta, "0")};
        p.validate();
        rep = verify_family(p, cfg.degree);
    } else if (o.kind == "gegenbauer") {
        const GegParams p{param(o.mu, "1/2"), param(o.alpha, "0")};
        p.validate();
        rep = verify_geg_family(p, cfg.degree);
    } else {
        throw InvalidParams("unknown family kind '" + o.kind + "'");
    }
    for (const auto& [k, v] : rep.params) cfg.params[k] = v.str();

    std::ostringstream os;
    if (cfg.format == "json") {
        os << json(rep).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << family_csv(rep);
    } else {
        os << rep.kind;
        for (const auto& [k, v] : rep.params) os << ' ' << k << '=' << v.str();
        os << '\n';
        for (const auto& r : rep.records) {
            os << "P" << r.n << " = " << r.poly.str() << "    lambda = " << r.eigenvalue.str()
               << "    <P,P> = " << r.norm_sq.str() << '\n';
        }
        for (const auto& d : rep.explicit_discrepancies) os << "discrepancy: " << d << '\n';
        os << "oracle checks: " << (rep.oracle_ok() ? "pass" : "FAIL") << '\n';
    }
    emit(cfg, os.str(), out);
    return rep.oracle_ok() ? 0 : 1;
}

int cmd_verify(Options& o, std::ostream& out) {
    auto& cfg = o.cfg;
    if (cfg.degree < 1) throw InvalidParams("degree must be >= 1");
    const SuiteResult r = run_suite(o.suite, cfg.degree, parse_variant(o.variant));
    const std::string summary = std::string("oracle checks: ") + (r.ok() ? "pass" : "FAIL") +
                                "; printed-formula discrepancies: " + std::to_string(r.discrepancies.size()) + " found";
    std::ostringstream os;
    if (cfg.format == "json") {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"suite", c.suite}, {"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        json j{{"suite", o.suite},
               {"checks", checks},
               {"discrepancies", r.discrepancies},
               {"relations", r.relations},
               {"spectra", r.spectra},
               {"oracle_ok", r.ok()},
               {"summary", summary}};
        os << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << relations_csv(r.relations);
    } else {
        for (const auto& c : r.checks)
            os << (c.ok ? "PASS " : "FAIL ") << c.suite << ": " << c.name << " (" << c.detail << ")\n";
        for (const auto& d : r.discrepancies) os << "DISCREPANCY " << d << '\n';
        os << summary << '\n';
    }
    emit(cfg, os.str(), out);
    if (!cfg.output.empty() || cfg.format != "text") out << summary << '\n';
    return r.ok() ? 0 : 1;
}

int cmd_spectrum(Options& o, std::ostream& out) {
    auto& cfg = o.cfg;
    if (o.levels < 1) throw InvalidParams("levels must be >= 1");
    SpectralProblem prob;
    std::vector<int> grids;
    double tol = 1e-6;
    if (o.system == "scarf") {
        prob = scarf_spectral_problem({param(o.alpha, "0"), param(o.beta, "2")});
        grids = {1024, 2048, 4096};
    } else if (o.system == "oscillator") {
        prob = oscillator_spectral_problem();
        grids = {1000, 2000, 4000};
    } else if (o.system == "gegenbauer") {
        const auto v = parse_variant(o.variant).value_or(Variant::corrected);
        prob = gegenbauer_spectral_problem({param(o.mu, "1/2"), param(o.alpha, "1")}, v);
        grids = {512, 1024, 2048};
        tol = 1e-5;
    } else if (o.system == "free") {
        prob = free_particle_problem();
        grids = {512, 1024, 2048};
    } else {
        throw InvalidParams("unknown system '" + o.system + "'");
    }
    if (!o.grids.empty()) grids = parse_grids(o.grids);
    if (o.tol > 0) tol = o.tol;
    cfg.grids = grids;
    cfg.params = prob.params;

    const SpectrumReport rep = convergence_study(prob, grids, o.levels);
    const bool ok = rep.passes(tol);
    std::ostringstream os;
    if (cfg.format == "json") {
        os << json(rep).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << spectrum_csv(rep);
    } else {
        os << rep.system;
        for (const auto& [k, v] : rep.params) os << ' ' << k << '=' << v;
        os << "  grids";
        for (int g : grids) os << ' ' << g;
        os << '\n';
        for (const auto& l : rep.levels) {
            os << "level " << l.level << "  E = " << format_double(l.extrapolated) << "  target "
               << format_double(l.target) << "  error " << std::setprecision(3) << l.abs_error << "  ("
               << to_string(l.method);
            if (l.order) os << ", order " << std::setprecision(3) << *l.order;
            os << ")" << (l.non_convergent ? " non-convergent" : "") << '\n';
        }
        os << "tolerance " << tol << ": " << (ok ? "pass" : "FAIL") << '\n';
    }
    emit(cfg, os.str(), out);
    return ok ? 0 : 1;
}

int cmd_errata(Options& o, std::ostream& out) {
    const auto entries = build_errata();
    std::ostringstream os;
    if (o.cfg.format == "json") {
        os << json(entries).dump(2) << '\n';
    } else if (o.cfg.format == "csv") {
        os << errata_csv(entries);
    } else {
        for (const auto& e : entries)
            os << "[" << e.id << "] " << e.equation_label << " (" << e.verdict << ")\n  printed:  " << e.printed
               << "\n  oracle:   " << e.oracle << "\n  evidence: " << e.evidence << "\n\n";
    }
    emit(o.cfg, os.str(), out);
    return 0;
}

void output_options(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output,-o", o.cfg.output, "write the report to this file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Dunkl-type supersymmetric quantum mechanics verification toolkit", "rsusy"};
    app.require_subcommand(1);

    auto* family = app.add_subcommand("family", "construct a polynomial family and its norms");
    family->add_option("--kind", o.kind)->check(CLI::IsMember({"jacobi-m1", "gegenbauer"}));
    family->add_option("--alpha", o.alpha);
    family->add_option("--beta", o.beta);
    family->add_option("--mu", o.mu);
    family->add_option("--degree,-D", o.cfg.degree)->default_val(5);
    output_options(family, o);

    auto* verify = app.add_subcommand("verify", "run the oracle verification suites");
    verify->add_option("--suite", o.suite)
        ->check(CLI::IsMember({"all", "exact", "jacobi", "gegenbauer", "susyqm", "oscillator", "intertwiners"}));
    verify->add_option("--variant", o.variant)->check(CLI::IsMember({"printed", "corrected", "both"}));
    verify->add_option("--degree,-D", o.cfg.degree)->default_val(20);
    output_options(verify, o);

    auto* spectrum = app.add_subcommand("spectrum", "grid spectra with a convergence study");
    spectrum->add_option("--system", o.system)->check(CLI::IsMember({"scarf", "oscillator", "gegenbauer", "free"}));
    spectrum->add_option("--alpha", o.alpha);
    spectrum->add_option("--beta", o.beta);
    spectrum->add_option("--mu", o.mu);
    spectrum->add_option("--variant", o.variant)->check(CLI::IsMember({"printed", "corrected"}));
    spectrum->add_option("--levels", o.levels);
    spectrum->add_option("--grids", o.grids, "comma-separated, ascending");
    spectrum->add_option("--tol", o.tol);
    output_options(spectrum, o);

    auto* errata = app.add_subcommand("errata", "consolidated report of printed formulas against the oracles");
    output_options(errata, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*family) return (o.cfg.command = "family", cmd_family(o, out));
        if (*verify) return (o.cfg.command = "verify", cmd_verify(o, out));
        if (*spectrum) return (o.cfg.command = "spectrum", cmd_spectrum(o, out));
        o.cfg.command = "errata";
        return cmd_errata(o, out);
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace rsusy
