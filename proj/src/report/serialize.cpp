#include "rsusy/report/serialize.hpp"

#include "rsusy/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace rsusy {

namespace {

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }
std::optional<bool> get_opt_bool(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

json rationals(const std::map<std::string, Rational>& m) {
    json o = json::object();
    for (const auto& [k, v] : m) o[k] = v.str();
    return o;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void to_json(json& j, const FamilyRecord& r) {
    json coeffs = json::array();
    for (const auto& c : r.poly.coeffs()) coeffs.push_back(c.str());
    j = json{{"n", r.n},
             {"eigenvalue", r.eigenvalue.str()},
             {"poly", r.poly.str()},
             {"coeffs", coeffs},
             {"degenerate", r.degenerate},
             {"residual_zero", r.residual_zero},
             {"gram_agrees", r.gram_agrees},
             {"norm_sq", r.norm_sq.str()},
             {"norm_match", opt_bool(r.norm_match)},
             {"explicit_printed_match", opt_bool(r.explicit_printed_match)},
             {"explicit_corrected_match", opt_bool(r.explicit_corrected_match)}};
}

void from_json(const json& j, FamilyRecord& r) {
    r.n = j.at("n").get<int>();
    r.eigenvalue = Rational::parse(j.at("eigenvalue").get<std::string>());
    std::vector<Rational> c;
    for (const auto& s : j.at("coeffs")) c.push_back(Rational::parse(s.get<std::string>()));
    r.poly = Poly(std::move(c));
    r.degenerate = j.at("degenerate").get<bool>();
    r.residual_zero = j.at("residual_zero").get<bool>();
    r.gram_agrees = j.at("gram_agrees").get<bool>();
    r.norm_sq = Rational::parse(j.at("norm_sq").get<std::string>());
    r.norm_match = get_opt_bool(j.at("norm_match"));
    r.explicit_printed_match = get_opt_bool(j.at("explicit_printed_match"));
    r.explicit_corrected_match = get_opt_bool(j.at("explicit_corrected_match"));
}

void to_json(json& j, const FamilyReport& r) {
    j = json{{"kind", r.kind},
             {"params", rationals(r.params)},
             {"degree", r.degree},
             {"records", r.records},
             {"orthogonality_violations", r.orthogonality_violations},
             {"norm_mismatches", r.norm_mismatches},
             {"oracle_failures", r.oracle_failures},
             {"explicit_discrepancies", r.explicit_discrepancies},
             {"oracle_ok", r.oracle_ok()}};
}

void from_json(const json& j, FamilyReport& r) {
    r.kind = j.at("kind").get<std::string>();
    r.params.clear();
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = Rational::parse(v.get<std::string>());
    r.degree = j.at("degree").get<int>();
    r.records = j.at("records").get<std::vector<FamilyRecord>>();
    r.orthogonality_violations = j.at("orthogonality_violations").get<std::vector<std::string>>();
    r.norm_mismatches = j.at("norm_mismatches").get<std::vector<std::string>>();
    r.oracle_failures = j.at("oracle_failures").get<std::vector<std::string>>();
    r.explicit_discrepancies = j.at("explicit_discrepancies").get<std::vector<std::string>>();
}

void to_json(json& j, const LevelRecord& r) {
    j = json{{"level", r.level},
             {"values", r.values},
             {"raw_errors", r.raw_errors},
             {"extrapolated", r.extrapolated},
             {"target", r.target},
             {"abs_error", r.abs_error},
             {"order", r.order ? json(*r.order) : json(nullptr)},
             {"method", to_string(r.method)},
             {"non_convergent", r.non_convergent}};
}

void from_json(const json& j, LevelRecord& r) {
    r.level = j.at("level").get<int>();
    r.values = j.at("values").get<std::vector<double>>();
    r.raw_errors = j.at("raw_errors").get<std::vector<double>>();
    r.extrapolated = j.at("extrapolated").get<double>();
    r.target = j.at("target").get<double>();
    r.abs_error = j.at("abs_error").get<double>();
    r.order = j.at("order").is_null() ? std::nullopt : std::optional<double>(j.at("order").get<double>());
    const auto m = j.at("method").get<std::string>();
    r.method = m == "exact"             ? Extrapolation::exact
               : m == "richardson"      ? Extrapolation::richardson
               : m == "estimated_order" ? Extrapolation::estimated_order
                                        : Extrapolation::none;
    r.non_convergent = j.at("non_convergent").get<bool>();
}

void to_json(json& j, const SpectrumReport& r) {
    j = json{{"system", r.system}, {"params", r.params}, {"grids", r.grids}, {"levels", r.levels}};
}

void from_json(const json& j, SpectrumReport& r) {
    r.system = j.at("system").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.grids = j.at("grids").get<std::vector<int>>();
    r.levels = j.at("levels").get<std::vector<LevelRecord>>();
}

void to_json(json& j, const RelationRecord& r) {
    j = json{{"relation", r.relation},
             {"variant", r.variant},
             {"params", r.params},
             {"residual", r.residual},
             {"residuals", r.residuals},
             {"order", r.order ? json(*r.order) : json(nullptr)},
             {"verdict", r.verdict},
             {"note", r.note}};
}

void from_json(const json& j, RelationRecord& r) {
    r.relation = j.at("relation").get<std::string>();
    r.variant = j.at("variant").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.residual = j.at("residual").get<double>();
    r.residuals = j.at("residuals").get<std::vector<double>>();
    r.order = j.at("order").is_null() ? std::nullopt : std::optional<double>(j.at("order").get<double>());
    r.verdict = j.at("verdict").get<std::string>();
    r.note = j.at("note").get<std::string>();
}

void to_json(json& j, const ErrataEntry& e) {
    j = json{{"id", e.id},
             {"equation_label", e.equation_label},
             {"printed", e.printed},
             {"oracle", e.oracle},
             {"evidence", e.evidence},
             {"verdict", e.verdict}};
}

void from_json(const json& j, ErrataEntry& e) {
    e.id = j.at("id").get<std::string>();
    e.equation_label = j.at("equation_label").get<std::string>();
    e.printed = j.at("printed").get<std::string>();
    e.oracle = j.at("oracle").get<std::string>();
    e.evidence = j.at("evidence").get<std::string>();
    e.verdict = j.at("verdict").get<std::string>();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string spectrum_csv(const SpectrumReport& r) {
    std::ostringstream os;
    os << "level";
    for (int N : r.grids) os << ",N" << N;
    os << ",extrapolated,target,abs_error,order\n";
    for (const auto& l : r.levels) {
        os << l.level;
        for (double v : l.values) os << ',' << format_double(v);
        os << ',' << format_double(l.extrapolated) << ',' << format_double(l.target) << ','
           << format_double(l.abs_error) << ',' << (l.order ? format_double(*l.order) : "") << '\n';
    }
    return os.str();
}

std::string family_csv(const FamilyReport& r) {
    std::ostringstream os;
    os << "n,eigenvalue,poly,norm_sq,residual_zero,gram_agrees\n";
    for (const auto& x : r.records)
        os << x.n << ',' << x.eigenvalue.str() << ',' << csv_quote(x.poly.str()) << ',' << x.norm_sq.str() << ','
           << x.residual_zero << ',' << x.gram_agrees << '\n';
    return os.str();
}

std::string relations_csv(const std::vector<RelationRecord>& rs) {
    std::ostringstream os;
    os << "relation,variant,alpha,beta,residual,order,verdict\n";
    for (const auto& r : rs) {
        auto get = [&](const char* k) {
            auto it = r.params.find(k);
            return it == r.params.end() ? std::string() : it->second;
        };
        os << csv_quote(r.relation) << ',' << r.variant << ',' << get("alpha") << ',' << get("beta") << ','
           << format_double(r.residual) << ',' << (r.order ? format_double(*r.order) : "") << ',' << r.verdict
           << '\n';
    }
    return os.str();
}

std::string errata_csv(const std::vector<ErrataEntry>& es) {
    std::ostringstream os;
    os << "id,equation_label,printed,oracle,evidence,verdict\n";
    for (const auto& e : es)
        os << csv_quote(e.id) << ',' << csv_quote(e.equation_label) << ',' << csv_quote(e.printed) << ','
           << csv_quote(e.oracle) << ',' << csv_quote(e.evidence) << ',' << e.verdict << '\n';
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw Error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot move report into place at " + path + ": " + ec.message());
    }
}

}  // namespace rsusy
