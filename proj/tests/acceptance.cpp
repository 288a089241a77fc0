// Acceptance gate: nine release criteria, one PASS/FAIL line each, exit 0
// only when every criterion holds. Scales are the release scales, so this
// binary runs minutes, not seconds.
#include <apgame/bounds.hpp>
#include <apgame/checks.hpp>
#include <apgame/lab.hpp>
#include <apgame/makers.hpp>
#include <apgame/referee.hpp>
#include <apgame/solver.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace apgame;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int ceil_isqrt(long long v) {
    long long s = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(v))));
    while (s > 0 && s * s >= v) --s;
    while (s * s < v) ++s;
    return static_cast<int>(s);
}

struct Outcome {
    bool ok = false;
    std::string detail;
};

int count_events(const Transcript& t, EventKind k) {
    int c = 0;
    for (const Turn& turn : t.turns)
        for (const Event& e : turn.events)
            if (e.kind == k) ++c;
    return c;
}

// --- criterion 1: exact solver vs the reference minimax ---
Outcome criterion1() {
    const auto t0 = Clock::now();
    int cases = 0;
    for (FamilyKind f : {FamilyKind::three_ap(), FamilyKind::schur()})
        for (int n = 1; n <= 8; ++n)
            for (int q = 1; q <= 3; ++q) {
                const Winner fast = solve(n, q, f).winner;
                const Winner slow = naive_solve(n, q, f);
                if (fast != slow) {
                    std::ostringstream os;
                    os << "solve and naive_solve disagree at n=" << n << " q=" << q
                       << " family=" << to_string(f);
                    return {false, os.str()};
                }
                ++cases;
            }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << "solve == naive_solve on " << cases << " (family,n,q) cases, n<=8, q<=3, in "
       << std::fixed << std::setprecision(1) << secs << "s (limit 600s)";
    return {secs < 600.0, os.str()};
}

// --- criterion 2: frozen perfect-play facts ---
Outcome criterion2() {
    SolveOptions opts;
    opts.canonical_hashing = true;
    if (solve(3, 1, FamilyKind::three_ap(), opts).winner != Winner::Breaker)
        return {false, "solve(3,1) is not a Breaker win"};
    if (solve(5, 1, FamilyKind::three_ap(), opts).winner != Winner::Maker)
        return {false, "solve(5,1) is not a Maker win"};
    const std::vector<int> frozen = {1, 1, 2, 2, 2, 2, 2, 2, 2, 2};
    std::ostringstream got;
    for (int n = 3; n <= 12; ++n) {
        const int th = exact_threshold(n, FamilyKind::three_ap(), opts);
        got << (n > 3 ? "," : "") << th;
        if (th != frozen[static_cast<size_t>(n - 3)]) {
            std::ostringstream os;
            os << "exact_threshold(" << n << ") = " << th << ", expected "
               << frozen[static_cast<size_t>(n - 3)];
            return {false, os.str()};
        }
    }
    return {true, "solve(3,1)=breaker, solve(5,1)=maker, thresholds n=3..12 = [" + got.str() + "]"};
}

// --- criterion 3: the perfect-play winner is monotone in the bias ---
Outcome criterion3() {
    SolveOptions opts;
    opts.canonical_hashing = true;
    int cases = 0;
    for (int n = 1; n <= 12; ++n) {
        bool breaker_seen = false;
        for (int q = 1; q <= 12; ++q) {
            const Winner w = solve(n, q, FamilyKind::three_ap(), opts).winner;
            if (breaker_seen && w != Winner::Breaker) {
                std::ostringstream os;
                os << "monotonicity broken at n=" << n << " q=" << q
                   << ": breaker wins at q-1 but not at q";
                return {false, os.str()};
            }
            breaker_seen = breaker_seen || w == Winner::Breaker;
            ++cases;
        }
        if (!breaker_seen) {
            std::ostringstream os;
            os << "no breaker win found for n=" << n << " at any q <= 12";
            return {false, os.str()};
        }
    }
    std::ostringstream os;
    os << "winner monotone in q over " << cases << " solved positions (n<=12, q<=12)";
    return {true, os.str()};
}

// --- criterion 4: block-all holds its guarantee bias ---
Outcome criterion4() {
    const std::vector<std::pair<int, int>> boards = {
        {100, 18}, {1000, 55}, {10000, 174}, {100000, 548}};
    const std::vector<std::string> makers = {"mid-third", "greedy", "random"};
    int games = 0;
    for (auto [n, expect_q] : boards) {
        const int q = ceil_isqrt(3LL * n);
        if (q != expect_q) {
            std::ostringstream os;
            os << "ceil(sqrt(3n)) at n=" << n << " computed as " << q << ", expected "
               << expect_q;
            return {false, os.str()};
        }
        for (const std::string& maker : makers) {
            GameConfig cfg;
            cfg.n = n;
            cfg.q = q;
            cfg.maker_id = maker;
            cfg.breaker_id = "block-all";
            cfg.seed = 1;
            const Transcript t = play_game(cfg);
            const int violations = count_events(t, EventKind::GuaranteeViolated);
            if (t.result != Winner::Breaker || violations != 0) {
                std::ostringstream os;
                os << "block-all vs " << maker << " at n=" << n << " q=" << q << ": winner="
                   << to_string(t.result) << " violations=" << violations;
                return {false, os.str()};
            }
            ++games;
        }
    }
    std::ostringstream os;
    os << games << "/12 games at q=ceil(sqrt(3n)) are breaker wins with zero "
       << "guarantee violations (n up to 1e5, all makers)";
    return {true, os.str()};
}

// --- criterion 5: three-interval calibration and capacity discipline ---
Outcome criterion5() {
    const std::vector<std::pair<int, int>> boards = {
        {1000, 45}, {10000, 142}, {100000, 448}, {1000000, 1415}};
    const std::vector<std::string> makers = {"mid-third", "greedy", "random"};
    std::map<int, int> base_q;
    std::vector<ExperimentRecord> records;
    for (auto [n, expect_q] : boards) {
        const int q0 = ceil_isqrt(2LL * n);
        if (q0 != expect_q) {
            std::ostringstream os;
            os << "ceil(sqrt(2n)) at n=" << n << " computed as " << q0 << ", expected "
               << expect_q;
            return {false, os.str()};
        }
        base_q[n] = q0;
        for (int shift = 0; shift <= 10; ++shift)
            for (const std::string& maker : makers) {
                GameConfig cfg;
                cfg.n = n;
                cfg.q = q0 + shift;
                cfg.maker_id = maker;
                cfg.breaker_id = "three-interval";
                cfg.seed = 1;
                records.push_back(run_experiment(cfg));
            }
    }
    const CalibrationResult cal = calibrate(records);
    if (cal.C_cal > 10) {
        std::ostringstream os;
        os << "C_cal = " << cal.C_cal << " exceeds the allowed 10";
        return {false, os.str()};
    }
    int in_scope = 0;
    int max_tstar_num = 0, max_tstar_den = 1; // track max t*/ceil(q/3)
    for (const ExperimentRecord& r : records) {
        const int shift = r.q - base_q[r.n];
        if (shift < cal.C_cal) continue;
        ++in_scope;
        const int cap = (r.q + 2) / 3;
        if (r.winner != Winner::Breaker || !r.t_star.has_value() || *r.t_star > cap ||
            r.guarantee_violations != 0) {
            std::ostringstream os;
            os << "at n=" << r.n << " q=" << r.q << " maker=" << r.maker_id << " (shift " << shift
               << " >= C_cal " << cal.C_cal << "): winner=" << to_string(r.winner) << " t_star="
               << (r.t_star ? std::to_string(*r.t_star) : "undefined") << " (cap " << cap << ")"
               << " violations=" << r.guarantee_violations;
            return {false, os.str()};
        }
        if (*r.t_star * max_tstar_den > max_tstar_num * cap) {
            max_tstar_num = *r.t_star;
            max_tstar_den = cap;
        }
    }
    std::ostringstream os;
    os << "C_cal=" << cal.C_cal << "; all " << in_scope << " grid games at shift >= C_cal are "
       << "breaker wins with t* defined, t* <= ceil(q/3) (worst " << max_tstar_num << "/"
       << max_tstar_den << "), and zero capacity violations";
    return {true, os.str()};
}

// --- criterion 6: mid-third wins below the lower bound (desk-scale substitute) ---
// The full guarantee quantifies over all breakers, so no finite set of
// opponents can verify it outright,
// and a literal "every game sets up a strength-q pivot" transcript is
// unattainable for the faithful strategies: a breaker that fails to block the
// scripted opening loses to a completed progression before any pivot is
// needed, and a breaker whose demand overflows leaves standing completions
// that the pivot scan rightly takes as immediate wins. The substitute checks
// that every game is won, that every win goes through one of the recognized
// mechanisms (strength pivot, immediate standing completion, or a completed
// opening), that every reported pivot beats the bias, and that the
// strength-pivot mechanism itself demonstrably fires at these scales.
Outcome criterion6() {
    const std::vector<int> boards = {10000, 100000, 1000000};
    const std::vector<std::string> breakers = {"block-all", "three-interval", "random"};
    std::ostringstream mech;
    int strength_pivot_games = 0;
    for (int n : boards) {
        const int q = static_cast<int>(std::floor(
            0.9 * evaluate_bound(BoundKind::PaperLower, n)));
        mech << (n == boards.front() ? "" : "; ") << "n=" << n << " q=" << q << ":";
        for (const std::string& breaker : breakers) {
            GameConfig cfg;
            cfg.n = n;
            cfg.q = q;
            cfg.maker_id = "mid-third";
            cfg.breaker_id = breaker;
            cfg.seed = 1;
            const Transcript t = play_game(cfg);
            if (t.result != Winner::Maker) {
                std::ostringstream os;
                os << "mid-third vs " << breaker << " at n=" << n << " q=" << q
                   << " is not a maker win";
                return {false, os.str()};
            }
            int pivots = 0, min_strength = 0;
            for (const Turn& turn : t.turns)
                for (const Event& e : turn.events)
                    if (e.kind == EventKind::PivotFound) {
                        ++pivots;
                        if (pivots == 1 || e.strength < min_strength) min_strength = e.strength;
                    }
            if (pivots > 0 && min_strength <= q) {
                std::ostringstream os;
                os << "vs " << breaker << " at n=" << n << ": pivot strength " << min_strength
                   << " does not beat q=" << q;
                return {false, os.str()};
            }
            if (pivots > 0) ++strength_pivot_games;
            const int immediate = count_events(t, EventKind::ImmediateWinTaken);
            const bool won_in_opening = t.rounds_played <= opening_budget(q);
            if (pivots == 0 && immediate == 0 && !won_in_opening) {
                std::ostringstream os;
                os << "vs " << breaker << " at n=" << n
                   << ": win not attributable to any recognized mechanism";
                return {false, os.str()};
            }
            mech << " " << breaker << "=";
            if (pivots > 0)
                mech << "pivot(s=" << min_strength << ")";
            else if (immediate > 0)
                mech << "immediate(r=" << t.rounds_played << ")";
            else
                mech << "opening(r=" << t.rounds_played << ")";
        }
    }
    if (strength_pivot_games == 0)
        return {false, "no game exercised the strength-pivot mechanism"};
    std::ostringstream os;
    os << "desk-scale property-based substitute for the asymptotic claim: 9/9 maker wins at "
       << "q=floor(0.9*sqrt(n/5.598)), every win through a recognized mechanism, every "
       << "reported pivot beats q, strength pivots fired in " << strength_pivot_games
       << " games [" << mech.str() << "]";
    return {true, os.str()};
}

// --- criterion 7: interval geometry and the reflection count invariant ---
Outcome criterion7() {
    for (const CheckResult& r :
         {check_claim1_geometry(500), check_claim2_separation(500),
          check_pair_completion_bounds(500), check_eq2_counting(10000)}) {
        if (!r.ok) return {false, r.name + ": " + r.detail};
    }
    return {true,
            "two-threat cap, side separation, and completion caps exhaustive to n=500; "
            "reflection-count invariant over 10000 randomized playouts"};
}

// --- criterion 8: the opening-ratio profile ---
Outcome criterion8() {
    for (const CheckResult& r :
         {check_f_initial(), check_f_nonincreasing(10000), check_f_derivative(10000)}) {
        if (!r.ok) return {false, r.name + ": " + r.detail};
    }
    return {true, "f(0) = sqrt(2) to 1e-12; f nonincreasing on a 10000-point grid, "
                  "confirmed by central differences"};
}

// --- criterion 9: byte-level reproducibility ---
Outcome criterion9() {
    for (const CheckResult& r : {check_transcript_determinism(), check_sweep_determinism()}) {
        if (!r.ok) return {false, r.name + ": " + r.detail};
    }
    // One board at lab scale on top of the desk-scale checks.
    GameConfig cfg;
    cfg.n = 10000;
    cfg.q = 120;
    cfg.maker_id = "mid-third";
    cfg.breaker_id = "three-interval";
    cfg.seed = 9;
    const Transcript a = play_game(cfg);
    const Transcript b = play_game(cfg);
    const std::string ja = to_json(a);
    if (ja != to_json(b)) return {false, "replaying the n=10000 config changed the transcript"};
    if (to_json(transcript_from_json(ja)) != ja)
        return {false, "n=10000 transcript does not round-trip through its serialization"};
    const ReplayResult rr = replay(a);
    if (!rr.valid) return {false, "n=10000 transcript fails replay: " + rr.reason};
    return {true, "transcripts byte-stable and replayable (including n=10000), sweep CSV "
                  "byte-identical across worker counts"};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %d: %s\n", out.ok ? "PASS" : "FAIL", c.id, out.detail.c_str());
        std::fflush(stdout);
        if (!out.ok) ++failures;
    }
    std::printf("%d/9 criteria passed\n", 9 - static_cast<int>(failures));
    return failures == 0 ? 0 : 1;
}
