#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apgame {

// One verification outcome; detail carries the first counterexample on
// failure and a coverage summary on success.
struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// --- board suite: combinatorial facts about boards and winning sets ---

// Pair completions per family stay within their caps: 3 for progressions,
// 2 for sum triples. Exhaustive over all pairs for every n up to max_n.
CheckResult check_pair_completion_bounds(int max_n = 500);

// z completes (c, m) exactly when c completes (z, m), for every pair-query
// family. Exhaustive up to max_n.
CheckResult check_completion_symmetry(int max_n = 80);

// |enumerate(3-AP, n)| equals sum over gaps d of (n - 2d).
CheckResult check_enumeration_count(int max_n = 500);

// Both interval schemes partition [1, n] with consistent boundaries.
CheckResult check_interval_partition(int max_n = 500);

// threats() agrees with a from-scratch scan over all winning sets on
// randomized positions.
CheckResult check_threat_consistency(int trials = 60, int max_n = 200,
                                     std::uint64_t seed = 1);

// Incremental greedy scores agree with the reference recomputation on
// randomized playouts.
CheckResult check_greedy_scores(int trials = 30, int max_n = 120, std::uint64_t seed = 1);

// --- claims suite: the geometry behind the interval strategies ---

// A point outside the middle third and a point inside it admit at most two
// completions landing outside the middle. Exhaustive up to max_n.
CheckResult check_claim1_geometry(int max_n = 500);

// Points on opposite sides of the middle third admit no completion outside
// the middle. Exhaustive up to max_n.
CheckResult check_claim2_separation(int max_n = 500);

// The middle interval fills by round ceil(q/3) whenever it fills at all, in
// games against the three-interval Breaker.
CheckResult check_claim3_tstar();

// Counting invariant for mid-third play: summing Breaker occupancy over the
// reflection sets of all open candidates above Maker's highest point never
// exceeds |B| * |M|. Sampled over randomized playouts.
CheckResult check_eq2_counting(int playouts = 400, std::uint64_t seed = 1);

// |A_i| <= 2|M|, with equality exactly when all reflections are in range and
// pairwise distinct. Randomized positions.
CheckResult check_pivot_size_bound(int trials = 300, std::uint64_t seed = 1);

// Post-middle forced demand stays within 3*m_side(t) + 2*m2(t*) in
// three-interval games.
CheckResult check_demand_bound();

// --- profile suite: the opening-ratio trade-off function ---

CheckResult check_f_initial();                      // f(0) = sqrt(2) to 1e-12
CheckResult check_f_nonincreasing(int grid = 10000); // tolerance 1e-9
CheckResult check_f_derivative(int grid = 10000);    // central differences <= 1e-9

// --- bounds suite: closed-form ordering ---

// krss-lower < paper-lower < paper-upper <= krss-upper for all n >= 12.
CheckResult check_bound_ordering(int max_n = 2000);

// (paper-upper / paper-lower)^2 is the constant 2*(3 + 1.5*sqrt(3)).
CheckResult check_gap_ratio();

// --- determinism suite ---

// Equal configs give byte-equal transcripts that replay cleanly.
CheckResult check_transcript_determinism();

// A sweep's CSV is byte-identical for 1 and several workers.
CheckResult check_sweep_determinism();

// Runs one named suite ("board", "claims", "profile", "bounds",
// "determinism") or "all". Unknown names throw.
std::vector<CheckResult> run_verify_suite(const std::string& suite = "all");

} // namespace apgame
