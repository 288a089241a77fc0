#include "apgame/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "apgame/bounds.hpp"
#include "apgame/breakers.hpp"
#include "apgame/errors.hpp"
#include "apgame/intervals.hpp"
#include "apgame/lab.hpp"
#include "apgame/makers.hpp"
#include "apgame/referee.hpp"
#include "apgame/rng.hpp"
#include "apgame/state.hpp"

namespace apgame {

namespace {

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

std::string spot(int n, Pos a, Pos b) {
    std::ostringstream out;
    out << "n=" << n << " pair (" << a << "," << b << ")";
    return out.str();
}

// Random position with disjoint Maker/Breaker sets, Maker first each round.
GameState random_position(Rng& rng, int n, int maker_points, int breaker_per_round) {
    GameState s(n);
    for (int r = 0; r < maker_points && s.unclaimed_count() > 1 + breaker_per_round; ++r) {
        Pos m = s.next_unclaimed(rng.range(1, n));
        if (m == 0) m = s.next_unclaimed(1);
        s.apply_maker_move(m);
        std::vector<Pos> batch;
        for (int j = 0; j < breaker_per_round; ++j) {
            Pos b = s.next_unclaimed(rng.range(1, n));
            if (b == 0) b = s.next_unclaimed(1);
            bool dup = std::find(batch.begin(), batch.end(), b) != batch.end();
            while (dup || !s.unclaimed(b)) {
                b = s.next_unclaimed(b + 1);
                if (b == 0) b = s.next_unclaimed(1);
                dup = std::find(batch.begin(), batch.end(), b) != batch.end();
            }
            batch.push_back(b);
        }
        if (!batch.empty()) s.apply_breaker_moves(batch, static_cast<int>(batch.size()));
    }
    return s;
}

} // namespace

CheckResult check_pair_completion_bounds(int max_n) {
    const char* name = "pair-completion-bounds";
    for (int n = 3; n <= max_n; ++n) {
        for (Pos a = 1; a <= n; ++a) {
            for (Pos b = a + 1; b <= n; ++b) {
                const auto ap = completions(FamilyKind::three_ap(), a, b, n);
                if (ap.size() > 3) {
                    return fail(name, "3-AP completions exceed 3 at " + spot(n, a, b));
                }
                const auto sc = completions(FamilyKind::schur(), a, b, n);
                if (sc.size() > 2) {
                    return fail(name, "sum-triple completions exceed 2 at " + spot(n, a, b));
                }
            }
        }
    }
    return pass(name, "all pairs up to n=" + std::to_string(max_n));
}

CheckResult check_completion_symmetry(int max_n) {
    const char* name = "completion-symmetry";
    const FamilyKind fams[] = {FamilyKind::three_ap(), FamilyKind::cyclic(),
                               FamilyKind::schur()};
    for (const FamilyKind& f : fams) {
        for (int n = 3; n <= max_n; ++n) {
            for (Pos a = 1; a <= n; ++a) {
                for (Pos b = a + 1; b <= n; ++b) {
                    for (Pos z : completions(f, a, b, n)) {
                        if (!completions(f, z, b, n).contains(a)) {
                            return fail(name, to_string(f) + " asymmetric at " + spot(n, a, b) +
                                                  " z=" + std::to_string(z));
                        }
                        if (!is_winning_triple(f, a, b, z, n)) {
                            return fail(name, to_string(f) + " non-winning completion at " +
                                                  spot(n, a, b) + " z=" + std::to_string(z));
                        }
                    }
                }
            }
        }
    }
    return pass(name, "three families, all pairs up to n=" + std::to_string(max_n));
}

CheckResult check_enumeration_count(int max_n) {
    const char* name = "enumeration-count";
    for (int n = 3; n <= max_n; ++n) {
        long long expect = 0;
        for (int d = 1; 2 * d < n; ++d) expect += n - 2 * d;
        const auto sets = enumerate_winning_sets(FamilyKind::three_ap(), n);
        if (static_cast<long long>(sets.size()) != expect) {
            return fail(name, "n=" + std::to_string(n) + " got " +
                                  std::to_string(sets.size()) + " expected " +
                                  std::to_string(expect));
        }
    }
    return pass(name, "progression counts match up to n=" + std::to_string(max_n));
}

CheckResult check_interval_partition(int max_n) {
    const char* name = "interval-partition";
    for (int n = 3; n <= max_n; ++n) {
        const ThirdsScheme t = ThirdsScheme::of(n);
        if (t.lo(1) != 1 || t.hi(3) != n || t.hi(1) + 1 != t.lo(2) || t.hi(2) + 1 != t.lo(3)) {
            return fail(name, "thirds boundaries broken at n=" + std::to_string(n));
        }
        for (Pos p = 1; p <= n; ++p) {
            const int i = t.interval_of(p);
            if (p < t.lo(i) || p > t.hi(i)) {
                return fail(name, "thirds misclassify p=" + std::to_string(p) +
                                      " at n=" + std::to_string(n));
            }
        }
        for (Pos ell : {Pos(1), Pos(n / 3), Pos(n / 2), Pos(2 * n / 3), Pos(n)}) {
            const QuartersScheme qs = QuartersScheme::of(n, ell);
            if (qs.j1_end > qs.ell || qs.ell > qs.j3_end || qs.j3_end > n) {
                return fail(name, "quarter boundaries out of order at n=" + std::to_string(n) +
                                      " ell=" + std::to_string(ell));
            }
            int counts[5] = {0, 0, 0, 0, 0};
            for (Pos p = 1; p <= n; ++p) {
                const int i = qs.interval_of(p);
                if (i < 1 || i > 4) {
                    return fail(name, "quarters misclassify p=" + std::to_string(p));
                }
                ++counts[i];
            }
            if (counts[1] + counts[2] + counts[3] + counts[4] != n) {
                return fail(name, "quarters do not cover n=" + std::to_string(n));
            }
        }
    }
    return pass(name, "both schemes partition up to n=" + std::to_string(max_n));
}

CheckResult check_threat_consistency(int trials, int max_n, std::uint64_t seed) {
    const char* name = "threat-consistency";
    Rng rng(seed);
    const FamilyKind fams[] = {FamilyKind::three_ap(), FamilyKind::cyclic(),
                               FamilyKind::schur()};
    for (int t = 0; t < trials; ++t) {
        const int n = rng.range(6, max_n);
        const FamilyKind f = fams[t % 3];
        GameState s = random_position(rng, n, rng.range(1, 10), rng.range(0, 3));

        std::vector<Pos> brute;
        for (const auto& w : enumerate_winning_sets(f, n)) {
            int mine = 0;
            Pos open = 0;
            for (Pos p : w) {
                if (s.maker_at(p)) {
                    ++mine;
                } else if (s.unclaimed(p)) {
                    open = p;
                } else {
                    open = -1;
                    break;
                }
            }
            if (mine == 2 && open > 0) brute.push_back(open);
        }
        std::sort(brute.begin(), brute.end());
        brute.erase(std::unique(brute.begin(), brute.end()), brute.end());

        if (threats(s, f) != brute) {
            return fail(name, to_string(f) + " threats mismatch at n=" + std::to_string(n) +
                                  " trial " + std::to_string(t));
        }
    }
    return pass(name, std::to_string(trials) + " randomized positions");
}

CheckResult check_greedy_scores(int trials, int max_n, std::uint64_t seed) {
    const char* name = "greedy-score-consistency";
    Rng rng(seed);
    const FamilyKind fams[] = {FamilyKind::three_ap(), FamilyKind::cyclic(),
                               FamilyKind::schur()};
    for (int t = 0; t < trials; ++t) {
        const int n = rng.range(8, max_n);
        const int q = rng.range(1, 4);
        const FamilyKind f = fams[t % 3];
        GameState s(n);
        GreedyEngine engine(n, f);
        while (s.unclaimed_count() > q) {
            Pos m = s.next_unclaimed(rng.range(1, n));
            if (m == 0) m = s.next_unclaimed(1);
            s.apply_maker_move(m);
            std::vector<Pos> batch;
            while (static_cast<int>(batch.size()) < q) {
                Pos b = s.next_unclaimed(rng.range(1, n));
                if (b == 0) b = s.next_unclaimed(1);
                while (std::find(batch.begin(), batch.end(), b) != batch.end()) {
                    b = s.next_unclaimed(b + 1);
                    if (b == 0) b = s.next_unclaimed(1);
                }
                batch.push_back(b);
            }
            s.apply_breaker_moves(batch, q);

            engine.sync(s);
            for (Pos z = s.next_unclaimed(1); z != 0; z = s.next_unclaimed(z + 1)) {
                if (engine.score(z) != brute_greedy_score(s, f, z)) {
                    return fail(name, to_string(f) + " score mismatch at n=" +
                                          std::to_string(n) + " z=" + std::to_string(z));
                }
            }
        }
    }
    return pass(name, std::to_string(trials) + " randomized playouts");
}

CheckResult check_claim1_geometry(int max_n) {
    const char* name = "claim1-two-threat-cap";
    for (int n = 3; n <= max_n; ++n) {
        const ThirdsScheme t = ThirdsScheme::of(n);
        auto outside_middle = [&](long long v) {
            return v >= 1 && v <= n && t.interval_of(static_cast<Pos>(v)) != 2;
        };
        for (int side : {1, 3}) {
            for (Pos m = t.lo(side); m <= t.hi(side); ++m) {
                for (Pos mp = t.lo(2); mp <= t.hi(2); ++mp) {
                    int cnt = 0;
                    if ((m + mp) % 2 == 0 && outside_middle((m + mp) / 2)) ++cnt;
                    if (outside_middle(2LL * mp - m)) ++cnt;
                    if (outside_middle(2LL * m - mp)) ++cnt;
                    if (cnt > 2) {
                        return fail(name, spot(n, m, mp) + " admits " + std::to_string(cnt) +
                                              " completions outside the middle");
                    }
                }
            }
        }
    }
    return pass(name, "exhaustive up to n=" + std::to_string(max_n));
}

CheckResult check_claim2_separation(int max_n) {
    const char* name = "claim2-side-separation";
    for (int n = 3; n <= max_n; ++n) {
        const ThirdsScheme t = ThirdsScheme::of(n);
        auto outside_middle = [&](long long v) {
            return v >= 1 && v <= n && t.interval_of(static_cast<Pos>(v)) != 2;
        };
        for (Pos m = t.lo(1); m <= t.hi(1); ++m) {
            for (Pos mp = t.lo(3); mp <= t.hi(3); ++mp) {
                if (((m + mp) % 2 == 0 && outside_middle((m + mp) / 2)) ||
                    outside_middle(2LL * mp - m) || outside_middle(2LL * m - mp)) {
                    return fail(name, spot(n, m, mp) + " admits a completion outside the middle");
                }
            }
        }
    }
    return pass(name, "exhaustive up to n=" + std::to_string(max_n));
}

CheckResult check_claim3_tstar() {
    const char* name = "claim3-middle-fill-round";
    int observed = 0;
    for (int n : {512, 1024, 2048, 4096}) {
        const int q = static_cast<int>(std::ceil(std::sqrt(2.0 * n))) + 2;
        for (const char* maker : {"mid-third", "greedy", "random"}) {
            GameConfig cfg;
            cfg.n = n;
            cfg.q = q;
            cfg.maker_id = maker;
            cfg.breaker_id = "three-interval";
            cfg.seed = 11;
            const ExperimentRecord rec = run_experiment(cfg);
            if (!rec.t_star) continue;
            ++observed;
            const int cap = (q + 2) / 3;
            if (*rec.t_star > cap) {
                return fail(name, std::string(maker) + " n=" + std::to_string(n) +
                                      " t*=" + std::to_string(*rec.t_star) + " exceeds ceil(q/3)=" +
                                      std::to_string(cap));
            }
        }
    }
    if (observed == 0) return fail(name, "no game ever filled the middle interval");
    return pass(name, std::to_string(observed) + " games filled the middle in time");
}

CheckResult check_eq2_counting(int playouts, std::uint64_t seed) {
    const char* name = "reflection-counting-invariant";
    Rng rng(seed);
    const char* breakers[] = {"block-all", "three-interval", "random"};
    long long states_checked = 0;

    for (int t = 0; t < playouts; ++t) {
        const int n = rng.range(24, 300);
        const int q = rng.range(2, std::max(3, std::min(14, n / 8)));
        GameConfig cfg;
        cfg.n = n;
        cfg.q = q;
        cfg.maker_id = "mid-third";
        cfg.breaker_id = breakers[t % 3];
        cfg.seed = rng.next();
        cfg.random_free_placement = (t % 2 == 0);

        auto maker = make_maker(cfg);
        auto breaker = make_breaker(cfg);
        GameState s(n);
        const int budget = opening_budget(q);

        while (s.unclaimed_count() > 0) {
            const MakerDecision md = maker->next_move(s);
            s.apply_maker_move(md.pos);
            if (winning_set_through(s, cfg.family, md.pos)) break;
            if (s.unclaimed_count() == 0) break;
            const BreakerDecision bd = breaker->next_moves(s, md.pos);
            s.apply_breaker_moves(bd.batch(), q);

            if (s.round() < budget || s.maker_points().empty()) continue;
            // Post-opening state: sum Breaker hits over the reflection sets
            // of every open candidate past Maker's highest point.
            const Pos ell = *std::max_element(s.maker_points().begin(), s.maker_points().end());
            const Pos j3_hi = 2 * n / 3;
            long long sum = 0;
            for (Pos i = s.next_unclaimed_in(ell + 1, j3_hi); i != 0;
                 i = s.next_unclaimed_in(i + 1, j3_hi)) {
                const PivotCandidate pc = pivot_candidate(s, i);
                for (Pos r : pc.reflections) {
                    if (s.breaker_at(r)) ++sum;
                }
            }
            const long long cap = static_cast<long long>(s.breaker_points().size()) *
                                  static_cast<long long>(s.maker_points().size());
            ++states_checked;
            if (sum > cap) {
                return fail(name, "sum " + std::to_string(sum) + " exceeds |B||M| " +
                                      std::to_string(cap) + " at n=" + std::to_string(n) +
                                      " q=" + std::to_string(q) + " round " +
                                      std::to_string(s.round()));
            }
        }
    }
    if (states_checked == 0) return fail(name, "no post-opening state was ever reached");
    return pass(name, std::to_string(states_checked) + " states over " +
                          std::to_string(playouts) + " playouts");
}

CheckResult check_pivot_size_bound(int trials, std::uint64_t seed) {
    const char* name = "reflection-set-size";
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int n = rng.range(10, 400);
        GameState s = random_position(rng, n, rng.range(1, 12), rng.range(0, 2));
        const auto& m = s.maker_points();
        if (m.empty()) continue;
        const Pos ell = *std::max_element(m.begin(), m.end());
        const Pos i = s.next_unclaimed_in(ell + 1, n);
        if (i == 0) continue;

        const PivotCandidate pc = pivot_candidate(s, i);
        const int cap = 2 * static_cast<int>(m.size());
        if (static_cast<int>(pc.reflections.size()) > cap) {
            return fail(name, "|A_i| " + std::to_string(pc.reflections.size()) + " exceeds " +
                                  std::to_string(cap) + " at n=" + std::to_string(n) +
                                  " i=" + std::to_string(i));
        }

        std::vector<long long> raw;
        for (Pos y : m) {
            raw.push_back(2LL * y - i);
            raw.push_back(2LL * i - y);
        }
        std::sort(raw.begin(), raw.end());
        const bool all_distinct = std::adjacent_find(raw.begin(), raw.end()) == raw.end();
        const bool all_in_range =
            raw.front() >= 1 && raw.back() <= static_cast<long long>(n);
        const bool equality = static_cast<int>(pc.reflections.size()) == cap;
        if (equality != (all_distinct && all_in_range)) {
            return fail(name, "equality condition broken at n=" + std::to_string(n) +
                                  " i=" + std::to_string(i));
        }
    }
    return pass(name, std::to_string(trials) + " randomized positions");
}

CheckResult check_demand_bound() {
    const char* name = "post-middle-demand-cap";
    int rounds_checked = 0;
    for (int n : {300, 1000, 3000}) {
        const int q = static_cast<int>(std::ceil(std::sqrt(2.0 * n)));
        for (const char* maker_id : {"mid-third", "greedy", "random"}) {
            GameConfig cfg;
            cfg.n = n;
            cfg.q = q;
            cfg.maker_id = maker_id;
            cfg.breaker_id = "three-interval";
            cfg.seed = 23;

            auto maker = make_maker(cfg);
            BreakerThreeInterval breaker(cfg);
            GameState s(n);
            while (s.unclaimed_count() > 0) {
                const MakerDecision md = maker->next_move(s);
                s.apply_maker_move(md.pos);
                if (winning_set_through(s, cfg.family, md.pos) || s.unclaimed_count() == 0) break;
                const BreakerDecision bd = breaker.next_moves(s, md.pos);
                s.apply_breaker_moves(bd.batch(), q);
            }

            const int t_star = breaker.t_star();
            if (t_star == 0) continue;
            const auto& log = breaker.round_log();
            for (size_t r = static_cast<size_t>(t_star); r < log.size(); ++r) {
                const RoundStats& cur = log[r];
                const RoundStats& prev = log[r - 1];
                int m_side = 0;
                if (cur.m1 > prev.m1) {
                    m_side = cur.m1;
                } else if (cur.m3 > prev.m3) {
                    m_side = cur.m3;
                } else {
                    continue; // Maker move was swallowed by an earlier win check
                }
                const int cap = 3 * m_side + 2 * breaker.m2_at_tstar();
                ++rounds_checked;
                if (cur.threats_created > cap) {
                    return fail(name, std::string(maker_id) + " n=" + std::to_string(n) +
                                          " round " + std::to_string(cur.round) + " demand " +
                                          std::to_string(cur.threats_created) + " exceeds " +
                                          std::to_string(cap));
                }
            }
        }
    }
    if (rounds_checked == 0) return fail(name, "no post-middle round was ever observed");
    return pass(name, std::to_string(rounds_checked) + " post-middle rounds");
}

CheckResult check_f_initial() {
    const char* name = "profile-initial-value";
    const double v = f_profile(0.0);
    const double expect = std::sqrt(2.0);
    if (std::abs(v - expect) > 1e-12) {
        return fail(name, "f(0) = " + std::to_string(v));
    }
    return pass(name, "f(0) matches sqrt(2) to 1e-12");
}

CheckResult check_f_nonincreasing(int grid) {
    const char* name = "profile-nonincreasing";
    double prev = f_profile(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double x = static_cast<double>(i) / grid;
        const double v = f_profile(x);
        if (v > prev + 1e-9) {
            return fail(name, "f increases at x=" + std::to_string(x));
        }
        prev = v;
    }
    return pass(name, std::to_string(grid) + "-point grid");
}

CheckResult check_f_derivative(int grid) {
    const char* name = "profile-derivative";
    const double h = 1e-6;
    for (int i = 1; i < grid; ++i) {
        const double x = static_cast<double>(i) / grid;
        if (x - h < 0.0 || x + h > 1.0) continue;
        const double d = (f_profile(x + h) - f_profile(x - h)) / (2.0 * h);
        if (d > 1e-9) {
            return fail(name, "central difference " + std::to_string(d) +
                                  " positive at x=" + std::to_string(x));
        }
    }
    return pass(name, "central differences nonpositive on the grid");
}

CheckResult check_bound_ordering(int max_n) {
    const char* name = "bound-ordering";
    for (long long n = 12; n <= max_n; ++n) {
        const double kl = evaluate_bound(BoundKind::KrssLower, n);
        const double pl = evaluate_bound(BoundKind::PaperLower, n);
        const double pu = evaluate_bound(BoundKind::PaperUpper, n);
        const double ku = evaluate_bound(BoundKind::KrssUpper, n);
        if (!(kl < pl && pl < pu && pu <= ku)) {
            return fail(name, "ordering broken at n=" + std::to_string(n));
        }
    }
    for (long long n : {10000LL, 1000000LL, 100000000LL}) {
        const double kl = evaluate_bound(BoundKind::KrssLower, n);
        const double pl = evaluate_bound(BoundKind::PaperLower, n);
        const double pu = evaluate_bound(BoundKind::PaperUpper, n);
        const double ku = evaluate_bound(BoundKind::KrssUpper, n);
        if (!(kl < pl && pl < pu && pu <= ku)) {
            return fail(name, "ordering broken at n=" + std::to_string(n));
        }
    }
    return pass(name, "ordering holds for 12 <= n <= " + std::to_string(max_n) +
                          " and spot checks");
}

CheckResult check_gap_ratio() {
    const char* name = "bound-gap-ratio";
    const double expect = 2.0 * (3.0 + 1.5 * std::sqrt(3.0));
    for (long long n : {12LL, 100LL, 5000LL, 1000000LL}) {
        const double pl = evaluate_bound(BoundKind::PaperLower, n);
        const double pu = evaluate_bound(BoundKind::PaperUpper, n);
        const double ratio = (pu / pl) * (pu / pl);
        if (std::abs(ratio - expect) > 1e-6) {
            return fail(name, "ratio " + std::to_string(ratio) + " at n=" + std::to_string(n));
        }
    }
    return pass(name, "squared gap matches 2*(3 + 1.5*sqrt(3))");
}

CheckResult check_transcript_determinism() {
    const char* name = "transcript-determinism";
    GameConfig cfgs[3];
    cfgs[0].n = 200;
    cfgs[0].q = 8;
    cfgs[0].maker_id = "mid-third";
    cfgs[0].breaker_id = "block-all";
    cfgs[0].seed = 5;
    cfgs[1].n = 150;
    cfgs[1].q = 5;
    cfgs[1].maker_id = "random";
    cfgs[1].breaker_id = "random";
    cfgs[1].seed = 99;
    cfgs[2].n = 120;
    cfgs[2].q = 6;
    cfgs[2].maker_id = "greedy";
    cfgs[2].breaker_id = "three-interval";
    cfgs[2].seed = 1234;
    cfgs[2].random_free_placement = true;

    for (const GameConfig& cfg : cfgs) {
        const Transcript a = play_game(cfg);
        const Transcript b = play_game(cfg);
        if (to_json(a) != to_json(b)) {
            return fail(name, cfg.maker_id + " vs " + cfg.breaker_id +
                                  " transcripts differ between runs");
        }
        const ReplayResult rr = replay(a);
        if (!rr.valid) {
            return fail(name, cfg.maker_id + " vs " + cfg.breaker_id +
                                  " replay rejected: " + rr.reason);
        }
        const Transcript c = transcript_from_json(to_json(a));
        if (to_json(c) != to_json(a)) {
            return fail(name, "serialization round trip altered the transcript");
        }
    }
    return pass(name, "three configurations, byte-stable and replayable");
}

CheckResult check_sweep_determinism() {
    const char* name = "sweep-determinism";
    SweepPlan plan;
    plan.n_list = {40, 80, 120};
    plan.q_rule = parse_q_rule("krss-upper");
    plan.pairs = {{"mid-third", "block-all"},
                  {"greedy", "three-interval"},
                  {"random", "random"}};
    plan.seeds = {1, 2, 3};

    const std::string solo = to_csv(sweep(plan, 1));
    const std::string pooled = to_csv(sweep(plan, 4));
    if (solo != pooled) return fail(name, "CSV differs between 1 and 4 workers");
    return pass(name, std::to_string(plan.n_list.size() * plan.pairs.size() *
                                     plan.seeds.size()) +
                          " games, byte-identical CSV");
}

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    const bool all = suite.empty() || suite == "all";
    bool known = all;

    if (all || suite == "board") {
        known = true;
        out.push_back(check_pair_completion_bounds());
        out.push_back(check_completion_symmetry());
        out.push_back(check_enumeration_count());
        out.push_back(check_interval_partition());
        out.push_back(check_threat_consistency());
        out.push_back(check_greedy_scores());
    }
    if (all || suite == "claims") {
        known = true;
        out.push_back(check_claim1_geometry());
        out.push_back(check_claim2_separation());
        out.push_back(check_claim3_tstar());
        out.push_back(check_eq2_counting());
        out.push_back(check_pivot_size_bound());
        out.push_back(check_demand_bound());
    }
    if (all || suite == "profile") {
        known = true;
        out.push_back(check_f_initial());
        out.push_back(check_f_nonincreasing());
        out.push_back(check_f_derivative());
    }
    if (all || suite == "bounds") {
        known = true;
        out.push_back(check_bound_ordering());
        out.push_back(check_gap_ratio());
    }
    if (all || suite == "determinism") {
        known = true;
        out.push_back(check_transcript_determinism());
        out.push_back(check_sweep_determinism());
    }
    if (!known) throw UnknownStrategy("unknown verify suite: " + suite);
    return out;
}

} // namespace apgame
