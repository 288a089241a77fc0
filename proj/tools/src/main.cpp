#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apgame/bounds.hpp"
#include "apgame/checks.hpp"
#include "apgame/errors.hpp"
#include "apgame/interactive.hpp"
#include "apgame/lab.hpp"
#include "apgame/referee.hpp"
#include "apgame/solver.hpp"

namespace {

using namespace apgame;

FamilyKind family_or_throw(const std::string& text) {
    const auto fam = parse_family(text);
    if (!fam) throw UnsupportedFamily("unknown family: " + text);
    return *fam;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct PlayArgs {
    int n = 0;
    int q = 0;
    std::string maker, breaker, family = "3ap", interactive, out;
    std::uint64_t seed = 0;
    bool opportunistic = false;
};

int run_play(const PlayArgs& a) {
    GameConfig cfg;
    cfg.n = a.n;
    cfg.q = a.q;
    cfg.family = family_or_throw(a.family);
    cfg.maker_id = a.interactive == "maker" ? "human" : a.maker;
    cfg.breaker_id = a.interactive == "breaker" ? "human" : a.breaker;
    cfg.seed = a.seed;
    cfg.opportunistic_win = a.opportunistic;
    cfg.validate();

    Transcript t;
    if (a.interactive == "maker") {
        HumanMaker human(cfg, std::cin, std::cout);
        auto bot = make_breaker(cfg);
        t = play_game(cfg, human, *bot);
    } else if (a.interactive == "breaker") {
        auto bot = make_maker(cfg);
        HumanBreaker human(cfg, std::cin, std::cout);
        t = play_game(cfg, *bot, human);
    } else {
        t = play_game(cfg);
    }

    if (!a.out.empty()) {
        std::ofstream f(a.out, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open for write: " + a.out);
        f << to_json(t);
        if (!f) throw std::runtime_error("write failed: " + a.out);
    }
    std::cout << to_string(t.result) << "\n";
    return 0;
}

struct SolveArgs {
    int n = 0;
    int q = 0;
    bool q_set = false;
    std::string family = "3ap";
    bool threshold = false;
};

int run_solve(const SolveArgs& a) {
    const FamilyKind fam = family_or_throw(a.family);
    if (a.threshold) {
        std::cout << exact_threshold(a.n, fam) << "\n";
        return 0;
    }
    if (!a.q_set) throw OutOfRange("solve needs --q or --threshold");
    std::cout << to_string(solve(a.n, a.q, fam).winner) << "\n";
    return 0;
}

struct SweepArgs {
    std::string plan_path, n_list, q_rule, pairs, seeds, out;
    int workers = 1;
};

int run_sweep(const SweepArgs& a) {
    const bool inline_given =
        !a.n_list.empty() || !a.q_rule.empty() || !a.pairs.empty() || !a.seeds.empty();
    if (a.plan_path.empty() == !inline_given) {
        throw OutOfRange("sweep needs either --plan or all of --n-list/--q-rule/--pairs/--seeds");
    }

    SweepPlan plan;
    if (!a.plan_path.empty()) {
        std::ifstream f(a.plan_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open plan: " + a.plan_path);
        std::ostringstream buf;
        buf << f.rdbuf();
        plan = plan_from_json(buf.str());
    } else {
        if (a.n_list.empty() || a.q_rule.empty() || a.pairs.empty() || a.seeds.empty()) {
            throw OutOfRange("inline sweep needs --n-list, --q-rule, --pairs and --seeds");
        }
        for (const std::string& s : split_csv(a.n_list)) plan.n_list.push_back(std::stoi(s));
        plan.q_rule = parse_q_rule(a.q_rule);
        for (const std::string& s : split_csv(a.pairs)) {
            const auto colon = s.find(':');
            if (colon == std::string::npos) {
                throw OutOfRange("pair must be maker:breaker, got " + s);
            }
            plan.pairs.emplace_back(s.substr(0, colon), s.substr(colon + 1));
        }
        for (const std::string& s : split_csv(a.seeds)) plan.seeds.push_back(std::stoull(s));
    }

    const auto records = sweep(plan, a.workers);
    write_csv(a.out, records);
    std::cout << records.size() << " records -> " << a.out << "\n";
    return 0;
}

int run_bounds(int n, int k) {
    for (BoundKind kind : kAllBoundKinds) {
        std::printf("%s %.6f\n", to_string(kind).c_str(), evaluate_bound(kind, n, k));
    }
    return 0;
}

int run_verify(const std::string& suite) {
    const auto results = run_verify_suite(suite);
    bool all_ok = true;
    for (const CheckResult& r : results) {
        std::cout << (r.ok ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
        all_ok = all_ok && r.ok;
    }
    return all_ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Biased Maker-Breaker games on arithmetic structures"};
    app.require_subcommand(1);

    PlayArgs play_args;
    auto* play = app.add_subcommand("play", "Play one game and print the winner");
    play->add_option("--n", play_args.n, "Board size")->required()->check(CLI::PositiveNumber);
    play->add_option("--q", play_args.q, "Breaker bias")->required()->check(CLI::PositiveNumber);
    play->add_option("--maker", play_args.maker, "Maker strategy id")->required();
    play->add_option("--breaker", play_args.breaker, "Breaker strategy id")->required();
    play->add_option("--seed", play_args.seed, "Random seed");
    play->add_option("--family", play_args.family, "3ap|kap:K|cyclic|schur");
    play->add_flag("--opportunistic", play_args.opportunistic,
                   "Take immediate wins in any phase");
    play->add_option("--interactive", play_args.interactive, "Seat played by a human")
        ->check(CLI::IsMember({"maker", "breaker"}));
    play->add_option("--out", play_args.out, "Transcript path");

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Perfect-play winner for a small board");
    solve_cmd->add_option("--n", solve_args.n, "Board size")
        ->required()
        ->check(CLI::PositiveNumber);
    auto* q_opt = solve_cmd->add_option("--q", solve_args.q, "Breaker bias")
                      ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--family", solve_args.family, "3ap|kap:K|cyclic|schur");
    solve_cmd->add_flag("--threshold", solve_args.threshold,
                        "Print the smallest q where Breaker wins");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run an experiment grid to CSV");
    sweep_cmd->add_option("--plan", sweep_args.plan_path, "Plan file (JSON)");
    sweep_cmd->add_option("--n-list", sweep_args.n_list, "Comma-separated board sizes");
    sweep_cmd->add_option("--q-rule", sweep_args.q_rule, "Bias rule, e.g. krss-upper*0.5+1");
    sweep_cmd->add_option("--pairs", sweep_args.pairs, "maker:breaker,maker:breaker,...");
    sweep_cmd->add_option("--seeds", sweep_args.seeds, "Comma-separated seeds");
    sweep_cmd->add_option("--out", sweep_args.out, "CSV output path")->required();
    sweep_cmd->add_option("--workers", sweep_args.workers, "Concurrent games")
        ->check(CLI::PositiveNumber);

    int bounds_n = 0;
    int bounds_k = 3;
    auto* bounds_cmd = app.add_subcommand("bounds", "Print every closed-form bound at n");
    bounds_cmd->add_option("--n", bounds_n, "Board size")->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--k", bounds_k, "Progression length for beck-kap")
        ->check(CLI::PositiveNumber);

    std::string verify_suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant check suites");
    verify_cmd->add_option("--suite", verify_suite,
                           "board|claims|profile|bounds|determinism|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 1;
    }

    try {
        if (play->parsed()) return run_play(play_args);
        if (solve_cmd->parsed()) {
            solve_args.q_set = q_opt->count() > 0;
            return run_solve(solve_args);
        }
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (bounds_cmd->parsed()) return run_bounds(bounds_n, bounds_k);
        if (verify_cmd->parsed()) return run_verify(verify_suite);
    } catch (const ReplayMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
