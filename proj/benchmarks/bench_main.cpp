#include <benchmark/benchmark.h>

#include <cmath>

#include "apgame/breakers.hpp"
#include "apgame/greedy_engine.hpp"
#include "apgame/referee.hpp"
#include "apgame/solver.hpp"
#include "apgame/state.hpp"

namespace {

using namespace apgame;

void BM_ThreatQuery(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GameState s(n);
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        Pos p = s.next_unclaimed(static_cast<Pos>(rng.range(1, n)));
        if (p == 0) p = s.next_unclaimed(1);
        s.apply_maker_move(p);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(threats(s, FamilyKind::three_ap()));
    }
}
BENCHMARK(BM_ThreatQuery)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_MidThirdGame(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GameConfig cfg;
    cfg.n = n;
    cfg.q = static_cast<int>(0.9 * std::sqrt(n / 5.598));
    if (cfg.q < 1) cfg.q = 1;
    cfg.maker_id = "mid-third";
    cfg.breaker_id = "three-interval";
    cfg.seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(play_game(cfg));
    }
}
BENCHMARK(BM_MidThirdGame)->Arg(10000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_BlockAllGame(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GameConfig cfg;
    cfg.n = n;
    cfg.q = static_cast<int>(std::ceil(std::sqrt(3.0 * n)));
    cfg.maker_id = "greedy";
    cfg.breaker_id = "block-all";
    cfg.seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(play_game(cfg));
    }
}
BENCHMARK(BM_BlockAllGame)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ExactSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SolveOptions opts;
        benchmark::DoNotOptimize(solve(n, 2, FamilyKind::three_ap(), opts));
    }
}
BENCHMARK(BM_ExactSolve)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
