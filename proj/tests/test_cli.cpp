#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "qsph/csv.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(QSPH_CLI_PATH) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("qsph_cli_test_" + name);
}

}  // namespace

TEST_CASE("cli run writes the rows csv") {
    const auto out = temp_path("run.csv");
    CHECK(run_cli("run --kernel wendland --order 1 --qubits 5 --points 21 --out " + out.string()) == 0);
    std::ifstream in(out);
    const auto rows = qsph::csv::read_rows(in);
    CHECK(rows.size() == 21);
    fs::remove(out);
}

TEST_CASE("cli sweep covers every kernel and order") {
    const auto out = temp_path("sweep.csv");
    CHECK(run_cli("sweep --kernel gaussian,wendland --order 0,2 --m-min 4 --m-max 5 --points 50 --out " +
                  out.string()) == 0);
    std::ifstream in(out);
    const auto rows = qsph::csv::read_sweep(in);
    CHECK(rows.size() == 8);
    fs::remove(out);
}

TEST_CASE("cli config file with flag override") {
    const auto cfg = temp_path("config.toml");
    const auto out = temp_path("cfg.csv");
    {
        std::ofstream f(cfg);
        f << "kernel = \"wendland\"\nqubits = 4\npoints = 11\n";
    }
    CHECK(run_cli("run --config " + cfg.string() + " --points 7 --out " + out.string()) == 0);
    std::ifstream in(out);
    CHECK(qsph::csv::read_rows(in).size() == 7);
    fs::remove(cfg);
    fs::remove(out);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("run --qubits 20") == 2);
    CHECK(run_cli("run --kernel cubic") == 2);
    CHECK(run_cli("run --estimator magic") == 2);
    CHECK(run_cli("run --bogus-flag") == 2);
    CHECK(run_cli("") == 2);
    CHECK(run_cli("--help > /dev/null") == 0);
    CHECK(run_cli("run --domain -1e308 1e308") == 2);
    // c = 2/(sqrt(pi) h^3) overflows, so c * N * ||a|| * 0 is NaN
    CHECK(run_cli("run --order 2 --h 1e-300 --qubits 2 --points 3 --out /dev/null") == 3);
}
