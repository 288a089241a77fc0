#pragma once

#include <memory>
#include <optional>

#include "apgame/greedy_engine.hpp"
#include "apgame/intervals.hpp"
#include "apgame/rng.hpp"
#include "apgame/strategy.hpp"

namespace apgame {

// Fraction of the Breaker bias spent on the opening: 1/2 + 1/(2*sqrt(3)).
inline constexpr double kOpeningRatio = 0.7886751345948129;

// Opening length in rounds, ceil(kOpeningRatio * q).
int opening_budget(int q);

// A candidate double-threat pivot i: claiming i turns every unclaimed member
// of A_i = {2y - i, 2i - y : y in M} into an immediate winning cell.
struct PivotCandidate {
    Pos pivot = 0;
    std::vector<Pos> reflections; // A_i, sorted
    std::vector<Pos> open;        // A_i minus Breaker's cells, sorted
    int strength = 0;             // |open|
    bool immediate_win = false;   // A_i already meets M
};

// Builds A_i for one candidate pivot.
PivotCandidate pivot_candidate(const GameState& s, Pos i);

// Scans unclaimed candidates in J3 = (max(M), floor(2n/3)]. Prefers an
// immediate win, else maximal strength; ties break to the smallest pivot.
// Empty when J3 has no unclaimed cell or Maker has no points.
std::optional<PivotCandidate> find_pivot(const GameState& s);

// Occupies the middle third for ceil(kOpeningRatio * q) rounds, then claims
// a pivot whose reflection set overwhelms the Breaker's bias, then cashes in.
// Falls back to greedy scoring if the script runs out of board (possible only
// outside the strategy's guarantee regime).
class MakerMidThird : public MakerStrategy {
public:
    explicit MakerMidThird(const GameConfig& cfg);
    MakerDecision next_move(const GameState& s) override;

    enum class Phase { Opening, Pivot, Endgame, Fallback };
    Phase phase() const { return phase_; }
    const std::optional<PivotCandidate>& pivot() const { return pivot_; }

private:
    Pos fallback_move(const GameState& s);

    GameConfig cfg_;
    Phase phase_ = Phase::Opening;
    int budget_;
    Pos cursor_; // opening scan start, ceil(n/3) + 1
    std::optional<PivotCandidate> pivot_;
    std::unique_ptr<GreedyEngine> engine_;
    Rng rng_;
};

// Maximizes the number of fresh threats each move (GreedyEngine scoring).
class MakerGreedy : public MakerStrategy {
public:
    explicit MakerGreedy(const GameConfig& cfg);
    MakerDecision next_move(const GameState& s) override;

private:
    GameConfig cfg_;
    GreedyEngine engine_;
};

// Uniform over unclaimed cells.
class MakerRandom : public MakerStrategy {
public:
    explicit MakerRandom(const GameConfig& cfg);
    MakerDecision next_move(const GameState& s) override;

private:
    GameConfig cfg_;
    Rng rng_;
    std::vector<Pos> pool_; // lazily cleaned sample pool
};

} // namespace apgame
