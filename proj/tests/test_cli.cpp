// End-to-end checks of the installed command line tool. HC2D_CLI_PATH is
// injected by the build and points at the freshly built binary.
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef HC2D_CLI_PATH
#error "HC2D_CLI_PATH must point at the CLI binary"
#endif

namespace fs = std::filesystem;

namespace {

fs::path make_work_dir() {
    static int counter = 0;
    const auto dir = fs::temp_directory_path()
                     / ("hc2d_cli_test_" + std::to_string(++counter));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cli(const fs::path& dir, const std::string& args) {
    const std::string cmd = "cd \"" + dir.string() + "\" && \"" HC2D_CLI_PATH "\" "
                            + args + " > stdout.txt 2> stderr.txt";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("version and help exit cleanly") {
    const auto dir = make_work_dir();
    CHECK(run_cli(dir, "--version") == 0);
    CHECK(slurp(dir / "stdout.txt").find("1.0.0") != std::string::npos);
    CHECK(run_cli(dir, "--help") == 0);
    CHECK(run_cli(dir, "wavefunction --help") == 0);
}

TEST_CASE("usage errors exit with 2") {
    const auto dir = make_work_dir();
    CHECK(run_cli(dir, "") == 2);
    CHECK(run_cli(dir, "no-such-command") == 2);
    CHECK(run_cli(dir, "spectrum --no-such-flag") == 2);
    CHECK(run_cli(dir, "spectrum --format yaml") == 2);
    CHECK(run_cli(dir, "wavefunction") == 2); // --r0 is required
}

TEST_CASE("domain errors exit with 2, compute failures with 3") {
    const auto dir = make_work_dir();
    CHECK(run_cli(dir, "wavefunction --r0 -1") == 2);
    CHECK(run_cli(dir, "wavefunction --r0 1 --order 0") == 2);
    CHECK(slurp(dir / "stderr.txt").find("error:") != std::string::npos);
    // eigensolver runs out of scan range for a very high order
    CHECK(run_cli(dir, "wavefunction --r0 1 --order 40") == 3);
}

TEST_CASE("wavefunction writes the sampled profile") {
    const auto dir = make_work_dir();
    REQUIRE(run_cli(dir, "wavefunction --l 0 --order 2 --r0 1.0823922 "
                         "--samples 500 --out wf.csv") == 0);
    const auto rows = read_csv(dir / "wf.csv");
    REQUIRE(rows.size() == 501);
    CHECK(rows[0] == std::vector<std::string>{"r", "R", "rho"});
    CHECK(std::stod(rows[1][0]) == doctest::Approx(1.0823922).epsilon(1e-12));
    CHECK(rows[1][1] == "0");
    for (std::size_t i = 1; i < rows.size(); i += 100) {
        const double R = std::stod(rows[i][1]);
        const double rho = std::stod(rows[i][2]);
        CHECK(rho == doctest::Approx(R * R).epsilon(1e-9));
    }
    CHECK(slurp(dir / "stdout.txt").find("wf.csv") != std::string::npos);
}

TEST_CASE("wavefunction json carries meta and data") {
    const auto dir = make_work_dir();
    REQUIRE(run_cli(dir, "wavefunction --l 1 --order 1 --r0 0.8 --samples 64 "
                         "--format json --plot wf.svg") == 0);
    const auto doc = nlohmann::json::parse(slurp(dir / "wavefunction.json"));
    CHECK(doc["meta"]["command"] == "wavefunction");
    CHECK(doc["meta"]["version"] == "1.0.0");
    CHECK(doc["meta"]["l"] == 1);
    CHECK(doc["meta"]["samples"] == 64);
    CHECK(doc["meta"]["node_count"] == 0);
    CHECK(doc["meta"]["energy"].get<double>() > 2.0);
    REQUIRE(doc["data"].is_array());
    REQUIRE(doc["data"].size() == 64);
    CHECK(doc["data"][0]["R"].get<double>() == 0.0);
    CHECK(doc["data"][0]["r"].get<double>() == doctest::Approx(0.8));

    const auto svg = slurp(dir / "wf.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("rho(r)") != std::string::npos);
}

TEST_CASE("spectrum emits one row per grid point and level") {
    const auto dir = make_work_dir();
    REQUIRE(run_cli(dir, "spectrum --l-max 1 --orders 1 --r0-min 1 --r0-max 2 "
                         "--r0-steps 3 --threads 2 --format json --out s.json "
                         "--plot s.svg") == 0);
    const auto doc = nlohmann::json::parse(slurp(dir / "s.json"));
    CHECK(doc["meta"]["command"] == "spectrum");
    CHECK(doc["meta"]["l_max"] == 1);
    CHECK(doc["meta"]["threads"] == 2);
    REQUIRE(doc["data"].size() == 6);
    for (const auto& row : doc["data"]) {
        const double e = row["energy"].get<double>();
        const double m = row["m"].get<double>();
        const int l = row["l"].get<int>();
        CHECK(e == doctest::Approx(l + 1 + 2 * m).epsilon(1e-12));
        CHECK(row["order"] == 1);
    }
    CHECK(slurp(dir / "s.svg").find("polyline") != std::string::npos);
}

TEST_CASE("spectrum default output path follows the format") {
    const auto dir = make_work_dir();
    REQUIRE(run_cli(dir, "spectrum --l-max 0 --orders 1 --r0-min 1 --r0-max 1.2 "
                         "--r0-steps 2") == 0);
    CHECK(fs::exists(dir / "spectrum.csv"));
    REQUIRE(run_cli(dir, "spectrum --l-max 0 --orders 1 --r0-min 1 --r0-max 1.2 "
                         "--r0-steps 2 --format json") == 0);
    CHECK(fs::exists(dir / "spectrum.json"));
}

TEST_CASE("crossings pins the known event") {
    const auto dir = make_work_dir();
    REQUIRE(run_cli(dir, "crossings --l-max 4 --orders 2 --r0-min 1 --r0-max 1.2 "
                         "--r0-steps 6 --threads 2 --out c.csv") == 0);
    const auto rows = read_csv(dir / "c.csv");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"l_a", "order_a", "l_b", "order_b",
                                              "r0_star", "energy_star"});
    CHECK(rows[1][0] == "0");
    CHECK(rows[1][1] == "2");
    CHECK(rows[1][2] == "4");
    CHECK(rows[1][3] == "1");
    CHECK(std::stod(rows[1][4]) == doctest::Approx(1.093424658339316).epsilon(1e-6));
    CHECK(std::stod(rows[1][5]) == doctest::Approx(5.018495315430455).epsilon(1e-6));
}

TEST_CASE("qfi reports the ranked level and its label") {
    const auto dir = make_work_dir();
    REQUIRE(run_cli(dir, "qfi --l-max 1 --orders 1 --r0-min 1 --r0-max 1.5 "
                         "--r0-steps 2 --level-rank 1 --out q.csv --plot q.svg") == 0);
    const auto rows = read_csv(dir / "q.csv");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"r0", "rank", "l", "order", "fisher_r0"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][1] == "1");
        CHECK(rows[i][2] == "0"); // the ground level carries l = 0 everywhere
        CHECK(rows[i][3] == "1");
        CHECK(std::stod(rows[i][4]) > 0.0);
    }
    CHECK(fs::exists(dir / "q.svg"));
}

TEST_CASE("observables sweeps a single cell") {
    const auto dir = make_work_dir();
    REQUIRE(run_cli(dir, "observables --l-max 0 --orders 1 --r0-min 1 --r0-max 1 "
                         "--r0-steps 1 --out obs.csv") == 0);
    const auto rows = read_csv(dir / "obs.csv");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"r0", "l", "order", "m", "energy",
                                              "kinetic", "potential", "fisher_rho",
                                              "fisher_r0"});
    const double energy = std::stod(rows[1][4]);
    const double kinetic = std::stod(rows[1][5]);
    const double potential = std::stod(rows[1][6]);
    CHECK(kinetic + potential == doctest::Approx(energy).epsilon(1e-8));
    CHECK(std::stod(rows[1][7]) > 0.0);
    CHECK(std::stod(rows[1][8]) > 0.0);
}

TEST_CASE("validate agrees with the oracle and honors the tolerance") {
    const auto dir = make_work_dir();
    REQUIRE(run_cli(dir, "validate --l 0 --orders 2 --r0 1.4142135623730951 "
                         "--step 2e-3 --tolerance 1e-3 --out v.csv") == 0);
    const auto rows = read_csv(dir / "v.csv");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"l", "r0", "order", "E_hyper",
                                              "E_fd", "abs_diff"});
    CHECK(std::stod(rows[1][3]) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(std::stod(rows[1][5]) < 1e-3);
    CHECK(slurp(dir / "stdout.txt").find("validated") != std::string::npos);

    // an unreachable tolerance turns the same run into a compute failure
    CHECK(run_cli(dir, "validate --l 0 --orders 1 --r0 1.4142135623730951 "
                       "--step 2e-3 --tolerance 1e-13") == 3);
    CHECK(slurp(dir / "stderr.txt").find("disagree") != std::string::npos);
}

} // TEST_SUITE
