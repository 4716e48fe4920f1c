#include "doctest.h"

#include "rsusy/jacobi/little_jacobi.hpp"
#include "rsusy/report/serialize.hpp"
#include "rsusy/susyqm/spectra.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace rsusy;

namespace {

template <class T>
T round_trip(const T& x) {
    return json::parse(json(x).dump()).get<T>();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("FamilyReport round trip") {
    const FamilyReport rep = verify_family({Rational(1, 3), Rational(2)}, 6);
    CHECK(round_trip(rep) == rep);
    const json j = rep;
    CHECK(j["params"]["alpha"] == "1/3");
    CHECK(j["records"][1]["coeffs"].is_array());
    CHECK(j["records"][0]["norm_match"].is_boolean());
}

TEST_CASE("SpectrumReport round trip keeps every bit") {
    SpectrumReport rep = convergence_study(free_particle_problem(), {64, 128, 256}, 3);
    rep.levels[0].order = std::nullopt;
    rep.levels[1].extrapolated = 0.1 + 0.2;
    rep.levels[2].abs_error = std::numeric_limits<double>::denorm_min();
    const SpectrumReport back = round_trip(rep);
    CHECK(back == rep);
    CHECK(json(rep)["levels"][0]["order"].is_null());
}

TEST_CASE("RelationRecord and errata round trip") {
    const auto rel = verify_operator_relations({Rational(1, 2), Rational(3, 2)}, 3);
    for (const auto& r : rel.records) CHECK(round_trip(r) == r);
    const auto errata = build_errata();
    CHECK(round_trip(errata) == errata);
}

TEST_CASE("errata entries carry the required findings") {
    const auto errata = build_errata();
    auto find = [&](const std::string& id) -> const ErrataEntry* {
        for (const auto& e : errata)
            if (e.id == id) return &e;
        return nullptr;
    };
    for (const char* id : {"exact-A11", "jacobi-413-prefactor", "jacobi-4140-kappa", "jacobi-414-exponent", "scarf-N0",
                           "scarf-429-tan", "scarf-430-tan", "scarf-432-constant", "geg-HG-potentials", "osc-315"}) {
        REQUIRE(find(id));
        CHECK(find(id)->verdict == "discrepancy");
    }
    CHECK(find("jacobi-Nn")->verdict == "consistent");
    CHECK(find("scarf-product")->verdict == "consistent");
    const auto& n0 = find("scarf-N0")->evidence;
    CHECK(n0.find("main text 1.27323954474") != std::string::npos);
    CHECK(n0.find("appendix 0.886226925453") != std::string::npos);
    CHECK(n0.find("beta integral 1;") != std::string::npos);
    CHECK(find("jacobi-414-exponent")->evidence.find("printed exponent 1/3") != std::string::npos);
    CHECK(find("scarf-429-tan")->evidence.find("c = 1 (printed 1/2)") != std::string::npos);
    // schema keys
    const json j = errata.front();
    for (const char* k : {"id", "equation_label", "printed", "oracle", "evidence", "verdict"}) CHECK(j.contains(k));
}

TEST_CASE("spectrum CSV") {
    SpectrumReport rep;
    rep.system = "test";
    rep.grids = {8, 16, 32};
    LevelRecord l;
    l.level = 0;
    l.values = {0.1, 0.2, 0.30000000000000004};
    l.extrapolated = 1.0 / 3.0;
    l.target = 0;
    l.abs_error = 1.0 / 3.0;
    rep.levels.push_back(l);
    l.level = 1;
    l.order = 2.0;
    rep.levels.push_back(l);
    const std::string csv = spectrum_csv(rep);
    std::istringstream in(csv);
    std::string header, row0, row1;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    CHECK(header == "level,N8,N16,N32,extrapolated,target,abs_error,order");
    CHECK(row0 == "0,0.10000000000000001,0.20000000000000001,0.30000000000000004,0.33333333333333331,0,0.33333333333333331,");
    CHECK(row1.substr(row1.rfind(',') + 1) == "2");
    CHECK(std::stod("0.33333333333333331") == 1.0 / 3.0);
}

TEST_CASE("write_atomic") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "rsusy_write_atomic";
    fs::create_directories(dir);
    const std::string path = (dir / "report.json").string();
    write_atomic(path, "first");
    write_atomic(path, "second");
    CHECK(slurp(path) == "second");
    int files = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        (void)e;
        ++files;
    }
    CHECK(files == 1);
    CHECK_THROWS_AS(write_atomic((dir / "missing" / "x.json").string(), "x"), Error);
    fs::remove_all(dir);
}
