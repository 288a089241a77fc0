#pragma once

#include <memory>
#include <vector>

#include "apgame/config.hpp"
#include "apgame/events.hpp"
#include "apgame/state.hpp"

namespace apgame {

struct MakerDecision {
    Pos pos = 0;
    std::vector<Event> events;
};

struct BreakerDecision {
    std::vector<Pos> forced; // blocks of the opponent's fresh threats
    std::vector<Pos> free;   // discretionary placements
    std::vector<Event> events;

    std::vector<Pos> batch() const {
        std::vector<Pos> b = forced;
        b.insert(b.end(), free.begin(), free.end());
        return b;
    }
};

// Strategies are stateful per game and driven strictly round by round by the
// referee: next_move/next_moves is called exactly once per round, and the
// returned moves are applied before the next call.
class MakerStrategy {
public:
    virtual ~MakerStrategy() = default;
    // State holds all rounds so far; the move is for round s.round() + 1.
    virtual MakerDecision next_move(const GameState& s) = 0;
};

class BreakerStrategy {
public:
    virtual ~BreakerStrategy() = default;
    // Called after the Maker move of the current round; last_maker is that
    // move. Must return exactly min(q, #unclaimed) distinct unclaimed cells.
    virtual BreakerDecision next_moves(const GameState& s, Pos last_maker) = 0;
};

// Construct by GameConfig::maker_id / breaker_id ("human" is not
// constructible here; interactive play injects its own strategy).
std::unique_ptr<MakerStrategy> make_maker(const GameConfig& cfg);
std::unique_ptr<BreakerStrategy> make_breaker(const GameConfig& cfg);

} // namespace apgame
