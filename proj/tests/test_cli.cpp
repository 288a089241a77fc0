#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "apgame/referee.hpp"

using namespace apgame;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

// Runs the installed CLI with stdout/stderr captured to scratch files.
RunResult run_cli(const std::string& args) {
    const std::string out_path = "test_cli_stdout.txt";
    const std::string err_path = "test_cli_stderr.txt";
    const std::string cmd =
        std::string(APGAME_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    const int raw = std::system(cmd.c_str());
    RunResult r;
#ifndef _WIN32
    if (raw != -1 && WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
#else
    r.code = raw;
#endif
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("solve prints the perfect-play winner") {
    RunResult r = run_cli("solve --n 5 --q 1");
    CHECK(r.code == 0);
    CHECK(r.out == "maker\n");

    r = run_cli("solve --n 3 --q 1");
    CHECK(r.code == 0);
    CHECK(r.out == "breaker\n");

    r = run_cli("solve --n 8 --threshold");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    r = run_cli("solve --n 7 --q 1 --family schur");
    CHECK(r.code == 0);
    CHECK(r.out == "maker\n");
}

TEST_CASE("bounds prints every closed form") {
    RunResult r = run_cli("bounds --n 300");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 8);
    const std::vector<std::string> names = {"krss-lower",  "krss-upper", "paper-lower",
                                            "paper-upper", "beck-kap",   "schur-lower",
                                            "schur-upper", "cyclic-upper"};
    for (size_t i = 0; i < names.size(); ++i) {
        CAPTURE(lines[i]);
        CHECK(lines[i].rfind(names[i] + " ", 0) == 0);
    }
    CHECK(lines[1] == "krss-upper 30.000000");
    CHECK(lines[4] == "beck-kap 5.000000");

    // --k switches the progression length for beck-kap only.
    RunResult r4 = run_cli("bounds --n 300 --k 4");
    REQUIRE(r4.code == 0);
    const auto lines4 = lines_of(r4.out);
    REQUIRE(lines4.size() == 8);
    CHECK(lines4[1] == lines[1]);
    CHECK(lines4[4] != lines[4]);
}

TEST_CASE("play writes a replayable transcript") {
    const std::string path = "test_cli_game.json";
    std::remove(path.c_str());
    RunResult r = run_cli("play --n 60 --q 4 --maker mid-third --breaker three-interval --seed 7 --out " +
                          path);
    REQUIRE(r.code == 0);
    const std::string body = slurp(path);
    REQUIRE_FALSE(body.empty());
    const Transcript t = transcript_from_json(body);
    CHECK(to_json(t) == body);
    CHECK(replay(t).valid);
    CHECK(r.out == to_string(t.result) + "\n");
    std::remove(path.c_str());
}

TEST_CASE("sweep accepts inline grids and is worker-count independent") {
    const std::string a = "test_cli_sweep_a.csv";
    const std::string b = "test_cli_sweep_b.csv";
    RunResult r1 = run_cli(
        "sweep --n-list 30,60 --q-rule krss-upper --pairs mid-third:block-all,random:random "
        "--seeds 1,2 --out " + a);
    REQUIRE(r1.code == 0);
    RunResult r2 = run_cli(
        "sweep --n-list 30,60 --q-rule krss-upper --pairs mid-third:block-all,random:random "
        "--seeds 1,2 --out " + b + " --workers 3");
    REQUIRE(r2.code == 0);

    const std::string csv_a = slurp(a);
    const std::string csv_b = slurp(b);
    CHECK(csv_a == csv_b);
    const auto rows = lines_of(csv_a);
    REQUIRE(rows.size() == 9); // header + 2*2*2 games
    CHECK(rows[0] == "n,q,family,maker,breaker,winner,rounds,t_star,max_forced_demand,violations,seed");
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("sweep accepts a plan file") {
    const std::string plan = "test_cli_plan.json";
    const std::string out = "test_cli_plan_out.csv";
    {
        std::ofstream f(plan, std::ios::binary);
        f << R"({"n_list":[24],"q_rule":"krss-upper","pairs":["greedy:block-all"],"seeds":[5]})";
    }
    RunResult r = run_cli("sweep --plan " + plan + " --out " + out);
    REQUIRE(r.code == 0);
    CHECK(lines_of(slurp(out)).size() == 2);
    std::remove(plan.c_str());
    std::remove(out.c_str());
}

TEST_CASE("verify runs a named suite") {
    RunResult r = run_cli("verify --suite profile");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    for (const auto& line : lines) CHECK(line.rfind("PASS ", 0) == 0);
}

TEST_CASE("bad usage exits with status 1") {
    CHECK(run_cli("solve --n 5").code == 1);          // needs --q or --threshold
    CHECK(run_cli("frobnicate").code == 1);           // unknown subcommand
    CHECK(run_cli("play --n 9 --q 0 --maker greedy --breaker random").code == 1);
    CHECK(run_cli("play --n 9 --q 2 --maker nonsense --breaker random").code == 1);
    CHECK(run_cli("solve --n 5 --q 1 --family 4ap").code == 1);
    CHECK(run_cli("bounds --n 0").code == 1);
    CHECK(run_cli("sweep --out x.csv").code == 1);    // neither plan nor inline grid
    CHECK(run_cli("sweep --plan p.json --n-list 9 --out x.csv").code == 1);
    CHECK(run_cli("verify --suite nonsense").code == 1);
}
