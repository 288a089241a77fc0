#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apgame/bounds.hpp"
#include "apgame/config.hpp"
#include "apgame/referee.hpp"

namespace apgame {

// One completed game, reduced to the columns of the sweep CSV.
struct ExperimentRecord {
    int n = 0;
    int q = 1;
    FamilyKind family = FamilyKind::three_ap();
    std::string maker_id;
    std::string breaker_id;
    Winner winner = Winner::Breaker;
    int rounds_played = 0;
    std::optional<int> t_star;    // round the middle interval filled, if ever
    int max_forced_demand = 0;    // peak per-round threat count the Breaker faced
    int guarantee_violations = 0; // GuaranteeViolated events across the game
    std::uint64_t seed = 0;
};

// Validates the transcript by replay, then recomputes the derived columns.
// max_forced_demand is the maximum over rounds of the number of fresh threats
// created by that round's Maker move (0 for families without pair queries).
ExperimentRecord summarize(const Transcript& t);

ExperimentRecord run_experiment(const GameConfig& cfg);

// Maps board size to Breaker bias. Either an explicit per-n list (paired with
// the plan's n_list) or scale * bound(n) + offset, rounded up for upper-bound
// kinds and down for lower-bound kinds, clamped to at least 1.
struct QRule {
    std::vector<int> explicit_qs;
    BoundKind kind = BoundKind::KrssUpper;
    double scale = 1.0;
    double offset = 0.0;
    int k = 3;

    int q_for(int n, std::size_t index) const;
};

// Grammar: NAME[*SCALE][+OFFSET|-OFFSET], e.g. "krss-upper",
// "paper-lower*0.9", "paper-upper+3".
QRule parse_q_rule(std::string_view text);

struct SweepPlan {
    std::vector<int> n_list;
    QRule q_rule;
    std::vector<std::pair<std::string, std::string>> pairs; // (maker, breaker)
    std::vector<std::uint64_t> seeds;
    FamilyKind family = FamilyKind::three_ap();
    bool opportunistic = false;
    bool random_free = false;
};

// Plan files use the same structured-text format as transcripts. Keys:
// n_list, q_rule (string or per-n integer array), pairs (["maker","breaker"]
// arrays or "maker:breaker" strings), seeds, family, opportunistic,
// random_free.
SweepPlan plan_from_json(const std::string& text);

// Runs every game in the plan, in plan order (n, then pair, then seed).
// Games run concurrently when workers > 1; results keep plan order, so output
// is byte-identical for any worker count.
std::vector<ExperimentRecord> sweep(const SweepPlan& plan, int workers = 1);

// Header: n,q,family,maker,breaker,winner,rounds,t_star,max_forced_demand,
// violations,seed. t_star is empty when the middle interval never filled.
std::string to_csv(const std::vector<ExperimentRecord>& records);

// Writes via a temp file and rename so readers never see a partial file.
void write_csv(const std::string& path, const std::vector<ExperimentRecord>& records);

struct ThresholdSearchSpec {
    int q_lo = 1;
    int q_hi = 2;
    int seeds_per_q = 1;
    int window = 5;           // linear verification half-width around q_hat
    std::uint64_t seed_base = 1;
};

struct ThresholdEstimate {
    int q_hat = 0; // smallest q whose whole verified suffix is Breaker wins
    std::vector<std::pair<int, Winner>> frontier; // verbatim window outcomes
};

// Binary search for the smallest q where the Breaker side wins every seed,
// then a linear scan over [q_hat - window, q_hat + window]; the frontier is
// reported verbatim because strategy-vs-strategy outcomes are not proven
// monotone in q.
ThresholdEstimate empirical_threshold(const std::string& maker_id, const std::string& breaker_id,
                                      int n, FamilyKind family, const ThresholdSearchSpec& spec);

struct CalibrationResult {
    // Smallest integer C with every game at q = ceil(sqrt(2n)) + C' a Breaker
    // win for all observed shifts C' >= C.
    int C_cal = 0;
    // Largest grid value c (step 0.01, c <= 1) with every game at
    // q = floor(c * sqrt(n / (3 + 1.5*sqrt(3)))) a Maker win.
    double c_cal = 0.0;
    bool c_cal_defined = false;
};

// Recomputes the calibration constants from raw records. Throws
// InsufficientData when no observed shift qualifies for C_cal.
CalibrationResult calibrate(const std::vector<ExperimentRecord>& records);

} // namespace apgame
