#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "anho/cli.hpp"

using namespace anho;
namespace fs = std::filesystem;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("anho");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "anho_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

struct Row {
    std::vector<std::string> cells;
};

std::vector<Row> parse_csv(const std::string& text) {
    std::vector<Row> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        Row row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.cells.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("spectrum at g = 0 reproduces the harmonic ladder") {
    const fs::path out = temp_file("harmonic.csv");
    REQUIRE(run_cli({"spectrum", "--m", "2", "--g", "0", "--n-max", "8", "--output",
                     out.string()}) == 0);
    const std::vector<Row> rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 10); // header + 9 levels
    CHECK(rows[0].cells[0] == "m");
    for (int n = 0; n <= 8; ++n) {
        const Row& r = rows[n + 1];
        REQUIRE(r.cells.size() == 7);
        const double model = std::stod(r.cells[4]);
        const double oracle = std::stod(r.cells[5]);
        const double rel = std::stod(r.cells[6]);
        CHECK(model == doctest::Approx(n + 0.5).epsilon(1e-10));
        CHECK(oracle == doctest::Approx(n + 0.5).epsilon(1e-10));
        CHECK(rel <= 1e-10);
    }
}

TEST_CASE("spectrum at g = 1 stays within 5% per level") {
    const fs::path out = temp_file("quartic.csv");
    REQUIRE(run_cli({"spectrum", "--m", "2", "--g", "1", "--output", out.string()}) == 0);
    for (const Row& r : parse_csv(slurp(out))) {
        if (r.cells[0] == "m") continue;
        CHECK(std::stod(r.cells[6]) <= 0.05);
    }
}

TEST_CASE("identical configurations give byte-identical output") {
    const fs::path a = temp_file("det_a.csv");
    const fs::path b = temp_file("det_b.csv");
    REQUIRE(run_cli({"spectrum", "--m", "3", "--g", "2.5", "--n-max", "4", "--output",
                     a.string()}) == 0);
    REQUIRE(run_cli({"spectrum", "--m", "3", "--g", "2.5", "--n-max", "4", "--output",
                     b.string()}) == 0);
    CHECK(slurp(a) == slurp(b));
    // thread count must not change the bytes either
    const fs::path c = temp_file("det_c.csv");
    REQUIRE(run_cli({"spectrum", "--m", "3", "--g", "2.5", "--n-max", "4", "--threads", "1",
                     "--output", c.string()}) == 0);
    CHECK(slurp(a) == slurp(c));
}

TEST_CASE("zeval: harmonic values, free-energy tail, monotone PMS index") {
    const fs::path out = temp_file("zeval.csv");
    REQUIRE(run_cli({"zeval", "--m", "2", "--g", "0", "--omega", "1.0", "--beta-start", "0.2",
                     "--beta-stop", "60", "--beta-count", "12", "--output", out.string()}) == 0);
    const std::vector<Row> rows = parse_csv(slurp(out));
    double prev_nc = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double beta = std::stod(rows[i].cells[0]);
        const double z = std::stod(rows[i].cells[1]);
        const double nc = std::stod(rows[i].cells[3]);
        CHECK(z == doctest::Approx(1.0 / (2.0 * std::sinh(0.5 * beta))).epsilon(1e-10));
        CHECK(nc >= 1.0 - 1e-12);
        CHECK(nc >= prev_nc);
        prev_nc = nc;
    }
    // large-beta free energy near E0 = 1/2
    const Row& last = rows.back();
    CHECK(std::stod(last.cells[2]) == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("json output mirrors the csv rows") {
    const fs::path out = temp_file("spectrum.json");
    REQUIRE(run_cli({"spectrum", "--m", "2", "--g", "1", "--n-max", "2", "--format", "json",
                     "--output", out.string()}) == 0);
    const nlohmann::json doc = nlohmann::json::parse(slurp(out));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 3);
    CHECK(doc[0]["n"] == 0);
    CHECK(doc[2]["n"] == 2);
    for (const auto& row : doc) {
        CHECK(row.contains("E_model"));
        CHECK(row.contains("E_oracle"));
        CHECK(row["rel_err"].get<double>() <= 0.05);
    }
}

TEST_CASE("figure emits the documented column layout") {
    const fs::path out = temp_file("fig_small.csv");
    REQUIRE(run_cli({"figure", "--m", "2", "--g-start", "0.5", "--g-stop", "5", "--g-count", "3",
                     "--output", out.string()}) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("# gnuplot") != std::string::npos);
    const std::vector<Row> rows = parse_csv(text);
    REQUIRE(rows.size() == 4); // header + 3 grid points
    REQUIRE(rows[0].cells.size() == 19);
    CHECK(rows[0].cells[0] == "g");
    CHECK(rows[0].cells[1] == "model_E0");
    CHECK(rows[0].cells[10] == "oracle_E0");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].cells.size() == 19);
        for (int n = 0; n <= 8; ++n) {
            const double model = std::stod(rows[i].cells[1 + n]);
            const double oracle = std::stod(rows[i].cells[10 + n]);
            CHECK(std::fabs(model - oracle) / oracle <= 0.05);
        }
    }
}

TEST_CASE("sweep covers the grid in input order") {
    const fs::path out = temp_file("sweep.csv");
    REQUIRE(run_cli({"sweep", "--m", "2", "--g-start", "0.1", "--g-stop", "10", "--g-count", "3",
                     "--n-max", "1", "--output", out.string()}) == 0);
    const std::vector<Row> rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 7); // header + 3 grid points x 2 levels
    CHECK(std::stod(rows[1].cells[1]) == doctest::Approx(0.1));
    CHECK(std::stod(rows[3].cells[1]) == doctest::Approx(1.0));
    CHECK(std::stod(rows[5].cells[1]) == doctest::Approx(10.0));
}

TEST_CASE("bad flags and malformed grids exit nonzero") {
    CHECK(run_cli({"spectrum", "--format", "yaml"}) != 0);
    CHECK(run_cli({"nonsense"}) != 0);
    CHECK(run_cli({"figure", "--m", "2", "--g-start", "5", "--g-stop", "0.5", "--g-count", "3",
                   "--output", temp_file("bad.csv").string()}) != 0);
}

TEST_CASE("validate --quick runs the fast subset under budget") {
    const auto start = std::chrono::steady_clock::now();
    const int rc = run_cli({"validate", "--quick"});
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(rc == 0);
    CHECK(seconds < 10.0);
}

TEST_CASE("degraded oracle tolerance is flagged but not fatal") {
    std::stringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    const int rc = run_cli({"validate", "--quick", "--oracle-tol", "1e-1"});
    std::cout.rdbuf(old);
    CHECK(rc == 0);
    CHECK(captured.str().find("degraded oracle tolerance") != std::string::npos);
}
