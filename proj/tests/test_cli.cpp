#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "disagree/config.hpp"
#include "disagree/runner.hpp"
#include "fixtures.hpp"

using namespace disagree;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("disagree_cli_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cli(const std::string& args) {
    const std::string cmd = std::string(DISAGREE_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(slurp(p));
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    FAIL("missing column " << name);
    return 0;
}

std::string config_path(const std::string& name) { return fixtures::source_path("configs/" + name); }

}  // namespace

TEST_CASE("config errors carry the source position") {
    try {
        parse_config("{\n  \"b\": 1,\n  oops\n}", "broken.json");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("broken.json:3:") != std::string::npos);
    }
    const std::string base = config_template(Family::DiscreteBandit);
    std::string unknown = base;
    unknown.replace(unknown.find("\"alpha\""), 7, "\"alfa\"");
    CHECK_THROWS_AS(parse_config(unknown), ConfigError);
}

TEST_CASE("an empty technology list is rejected") {
    const std::string text = R"({"b": 1, "alpha": 0, "payoff": {"utility": "quadratic", "c": 4, "beta": 2},
                                 "technologies": [], "models": {"A": [], "B": []}})";
    CHECK_THROWS_AS(parse_config(text), ConfigError);
    const auto dir = scratch("empty");
    std::ofstream(dir / "empty.json") << text;
    CHECK(cli("--config " + (dir / "empty.json").string() + " --experiment solve --out " + dir.string()) == kExitInvalid);
}

TEST_CASE("templates parse and validate") {
    for (Family f : {Family::DiscreteBandit, Family::AdditiveNoise, Family::UniformLinear, Family::InverseInfoLinear}) {
        CAPTURE(to_string(f));
        const auto loaded = parse_config(config_template(f), "template");
        CHECK_NOTHROW(loaded.game.validate());
        CHECK(loaded.game.pair(0).family() == f);
    }
    const auto bandit = parse_config(config_template(Family::DiscreteBandit)).game;
    const auto& bp = std::get<BanditParams>(bandit.pair(0).params());
    CHECK(bp.r == 0.0);
    CHECK(bp.R == 1.0);
    CHECK(bp.lambda == 1.0);
    CHECK(bandit.payoff.c() == 4.0);
    CHECK(bandit.payoff.beta() == 2.0);
    CHECK(bandit.alpha == 0.0);

    const auto uni = parse_config(config_template(Family::UniformLinear)).game;
    const auto& up = std::get<UniformLinearParams>(uni.pair(0).params());
    CHECK(up.gamma_H == 1.0);
    CHECK(up.psi == 5.0);
    CHECK(uni.alpha == 0.05);

    CHECK(cli("--template DiscreteBandit") == kExitOk);
    CHECK(cli("--template NoSuchFamily") == kExitInvalid);
}

TEST_CASE("exit codes") {
    const auto dir = scratch("codes");
    CHECK(cli("--config " + config_path("illustration.json") + " --experiment solve --out " + dir.string()) == kExitOk);
    CHECK(cli("--config " + config_path("illustration.json") + " --experiment nonsense --out " + dir.string()) ==
          kExitInvalid);
    CHECK(cli("--config " + (dir / "missing.json").string() + " --experiment solve --out " + dir.string()) ==
          kExitInvalid);
    CHECK(cli("--config " + fixtures::source_path("tests/data/nonconvergent.json") + " --experiment solve --out " +
              dir.string()) == kExitNonConvergence);

    // Monte Carlo without a seed anywhere
    const std::string text = R"({"b": 1, "alpha": 0, "payoff": {"utility": "quadratic", "c": 4, "beta": 2},
        "technologies": [{"name": "x", "view": {"family": "DiscreteBandit", "params": {"r": 0, "R": 1, "lambda": 1}}, "Q": "H"}],
        "models": {"A": ["H"], "B": ["L"]}})";
    std::ofstream(dir / "noseed.json") << text;
    CHECK(cli("--config " + (dir / "noseed.json").string() + " --experiment solve --mc 1000 --out " + dir.string()) ==
          kExitInvalid);
    CHECK(cli("--config " + (dir / "noseed.json").string() + " --experiment solve --mc 1000 --seed 5 --out " +
              dir.string()) == kExitOk);
}

TEST_CASE("solve writes the equilibrium effort") {
    const auto dir = scratch("solve");
    std::ostringstream log;
    REQUIRE(run({config_path("example3.json"), "solve", dir.string()}, log) == kExitOk);
    const auto rows = read_csv(dir / "results.csv");
    REQUIRE(rows.size() >= 2);
    const double e1 = std::stod(rows[1][column(rows[0], "e1_A")]);
    CHECK(std::abs(e1 - 1.2) <= 10.0 / 400 / 10);
    CHECK(fs::exists(dir / "report.txt"));
    CHECK(fs::exists(dir / "curves.csv"));
}

TEST_CASE("paper suite reports the team-formation inequality") {
    const auto dir = scratch("suite");
    std::ostringstream log;
    REQUIRE(run({config_path("illustration.json"), "paper-suite", dir.string()}, log) == kExitOk);
    const std::string report = slurp(dir / "report.txt");
    CHECK(report.find("1.4375 > 1") != std::string::npos);
}

TEST_CASE("identical manifests give byte-identical outputs") {
    const auto a = scratch("det_a"), b = scratch("det_b");
    const std::string common = "--config " + config_path("illustration.json") + " --experiment solve --mc 20000 --seed 17";
    REQUIRE(cli(common + " --out " + a.string()) == kExitOk);
    REQUIRE(cli(common + " --out " + b.string()) == kExitOk);
    for (const char* f : {"results.csv", "curves.csv", "report.txt"}) {
        CAPTURE(f);
        const std::string sa = slurp(a / f);
        CHECK(!sa.empty());
        CHECK(sa == slurp(b / f));
    }
}

TEST_CASE("CSV numbers round-trip at 17 significant digits") {
    const auto dir = scratch("roundtrip");
    std::ostringstream log;
    RunManifest m{config_path("bandit_r05_two_tech.json"), "compare-two-tech", dir.string()};
    REQUIRE(run(m, log) == kExitOk);
    int numeric = 0;
    for (const char* f : {"results.csv", "curves.csv"}) {
        const auto rows = read_csv(dir / f);
        for (std::size_t r = 1; r < rows.size(); ++r)
            for (const auto& cell : rows[r]) {
                char* end = nullptr;
                const double x = std::strtod(cell.c_str(), &end);
                if (cell.empty() || *end != '\0') continue;
                ++numeric;
                CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
                CHECK(format_number(x) == cell);
            }
    }
    CHECK(numeric > 100);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 10000; ++i) {
        const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("every named experiment runs on a matching config") {
    const std::vector<std::pair<std::string, std::string>> runs{
        {"illustration.json", "validate-views"},   {"illustration.json", "compare-one-tech"},
        {"illustration.json", "benchmark-modes"},  {"illustration_two_tech.json", "compare-two-tech"},
        {"example3.json", "paper-suite"},          {"bandit_r05_two_tech.json", "paper-suite"},
    };
    for (const auto& [cfg, exp] : runs) {
        CAPTURE(cfg);
        CAPTURE(exp);
        const auto dir = scratch("all_" + exp);
        std::ostringstream log;
        CHECK(run({config_path(cfg), exp, dir.string()}, log) == kExitOk);
        CHECK(fs::file_size(dir / "results.csv") > 0);
    }
}
