#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("chab_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CHAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("figure subcommand writes svg") {
    const fs::path dir = fresh_dir("figure");
    CHECK(run_cli("figure d-bouquet --m-max 3 --out " + dir.string()) == 0);
    CHECK(fs::exists(dir / "figure.svg"));

    CHECK(run_cli("figure layer --m 2 --q-max 4 --out " + dir.string()) == 0);
    CHECK(run_cli("figure line-points --r 1 --r 0.1 --out " + dir.string()) == 0);
    CHECK(run_cli("figure pinching --m 1 --theta 1 2 --out " + dir.string()) == 0);
}

TEST_CASE("run subcommand executes a decay config") {
    const fs::path dir = fresh_dir("run");
    const fs::path cfg = dir / "config.json";
    std::ofstream(cfg) << R"({"version":1,"kind":"decay",
        "spec":{"family":"R","r_limit":"inf"},
        "n_values":[10,100],"R":1000,"delta":1.0,
        "out_dir":")" << dir.string() << R"("})";
    CHECK(run_cli("run " + cfg.string()) == 0);
    CHECK(fs::exists(dir / "results.json"));
    CHECK(fs::exists(dir / "data.csv"));
}

TEST_CASE("run subcommand executes a figure config") {
    const fs::path dir = fresh_dir("run_figure");
    const fs::path cfg = dir / "config.json";
    std::ofstream(cfg) << R"({"version":1,"kind":"figure",
        "figure":{"kind":"layer","m":2,"q_max":4},
        "out_dir":")" << dir.string() << R"("})";
    CHECK(run_cli("run " + cfg.string()) == 0);
    CHECK(fs::exists(dir / "figure.svg"));
}

TEST_CASE("invalid configs exit nonzero") {
    const fs::path dir = fresh_dir("bad");
    const fs::path cfg = dir / "config.json";
    std::ofstream(cfg) << R"({"version":9,"kind":"decay"})";
    CHECK(run_cli("run " + cfg.string()) == 1);
    CHECK(run_cli("run /nonexistent/config.json") == 1);
    CHECK(run_cli("figure no-such-kind --out " + dir.string()) == 1);
}

TEST_CASE("sweep-oracle subcommand") {
    const fs::path dir = fresh_dir("sweep");
    CHECK(run_cli("sweep-oracle --pairs 5 --seed 3 --out " + dir.string()) == 0);
    CHECK(fs::exists(dir / "results.json"));
}

TEST_CASE("decay-curve figure from a spec file") {
    const fs::path dir = fresh_dir("curve");
    const fs::path spec = dir / "spec.json";
    std::ofstream(spec) << R"({"family":"C","x_limit":"inf"})";
    CHECK(run_cli("figure decay-curve --spec " + spec.string() +
                  " --n 5 --n 20 --R 4 --delta 0.2 --out " + dir.string()) == 0);
    CHECK(fs::exists(dir / "figure.svg"));
    CHECK(fs::exists(dir / "data.csv"));
}
