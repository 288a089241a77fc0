#pragma once

#include <vector>

#include "apgame/intervals.hpp"
#include "apgame/rng.hpp"
#include "apgame/strategy.hpp"

namespace apgame {

// Unclaimed completions of (last, y) over Maker's other points y: the cells
// Breaker must block this round to kill every fresh threat. Sorted ascending.
std::vector<Pos> forced_blocks(const GameState& s, const FamilyKind& f, Pos last_maker);

// Blocks every fresh threat, spends leftover bias on free cells
// (lowest-unclaimed-first, or uniform when random_free_placement is set).
// When demand exceeds the bias it keeps the q smallest blocks and emits
// GuaranteeViolated with the deficit.
class BreakerBlockAll : public BreakerStrategy {
public:
    explicit BreakerBlockAll(const GameConfig& cfg);
    BreakerDecision next_moves(const GameState& s, Pos last_maker) override;

private:
    GameConfig cfg_;
    Rng rng_;
    Pos free_cursor_ = 1;
    std::vector<Pos> pool_;       // random mode sample pool
    std::vector<int> batch_mark_; // epoch-stamped in-batch filter
    int epoch_ = 0;
};

// Blocks fresh threats and pours free moves into the middle third until it
// fills at round t*, then shadows the Maker's interval. Logs per-round stats
// and monitors its own capacity guarantee.
class BreakerThreeInterval : public BreakerStrategy {
public:
    explicit BreakerThreeInterval(const GameConfig& cfg);
    BreakerDecision next_moves(const GameState& s, Pos last_maker) override;

    // 0 while the middle is not yet full.
    int t_star() const { return t_star_; }
    int m2_at_tstar() const { return m2_at_tstar_; }
    const std::vector<RoundStats>& round_log() const { return log_; }

private:
    enum class Phase { FillingMiddle, PostMiddle };

    bool in_batch(Pos p) const { return batch_mark_[static_cast<size_t>(p)] == epoch_; }
    void mark(Pos p) { batch_mark_[static_cast<size_t>(p)] = epoch_; }
    // Next unclaimed, not-in-batch cell at or after *cursor within [*cursor, hi].
    Pos take_from(const GameState& s, Pos* cursor, Pos hi);
    Pos draw_from_pool(const GameState& s, std::vector<Pos>& pool);

    GameConfig cfg_;
    ThirdsScheme thirds_;
    Rng rng_;
    Phase phase_ = Phase::FillingMiddle;
    int t_star_ = 0;
    int m2_at_tstar_ = 0;
    Pos ell_ = 0; // max Maker point seen, for the quarters log
    int m_count_[4] = {0, 0, 0, 0};
    int b_quarter_[5] = {0, 0, 0, 0, 0};
    Pos mid_cursor_, left_cursor_ = 1, right_cursor_, any_cursor_ = 1;
    std::vector<Pos> pool_mid_, pool_left_, pool_right_, pool_any_;
    bool pools_init_ = false;
    std::vector<int> batch_mark_;
    int epoch_ = 0;
    std::vector<RoundStats> log_;
};

// Uniform batch over unclaimed cells.
class BreakerRandom : public BreakerStrategy {
public:
    explicit BreakerRandom(const GameConfig& cfg);
    BreakerDecision next_moves(const GameState& s, Pos last_maker) override;

private:
    GameConfig cfg_;
    Rng rng_;
    std::vector<Pos> pool_;
    std::vector<int> batch_mark_;
    int epoch_ = 0;
};

} // namespace apgame
