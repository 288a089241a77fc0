#pragma once

#include <optional>
#include <string>

#include "apgame/strategy.hpp"

namespace apgame {

enum class Side { Maker, Breaker };
using Winner = Side;

std::string to_string(Side s); // "maker" / "breaker"

struct Turn {
    int round = 0;
    Pos maker_move = 0;
    std::vector<Pos> breaker_moves;
    std::vector<Event> events;
};

// Complete, reproducible record of one game. An illegal move forfeits for
// the side that made it; the offending move itself is not recorded.
struct Transcript {
    GameConfig config;
    std::vector<Turn> turns;
    Winner result = Winner::Breaker;
    std::optional<std::vector<Pos>> winning_set; // present iff Maker won
    int rounds_played = 0;
    std::optional<Side> forfeited_by;
};

// Plays one game to completion with strategies built from the config.
Transcript play_game(const GameConfig& cfg);

// Same, with caller-supplied strategies (interactive seats, tests).
Transcript play_game(const GameConfig& cfg, MakerStrategy& maker, BreakerStrategy& breaker);

struct ReplayResult {
    bool valid = false;
    int fail_round = 0;    // 0 when valid
    std::string reason;    // empty when valid
    Winner recomputed = Winner::Breaker;
};

// Re-applies every recorded move from an empty board, checking legality,
// batch sizes, early stopping, and that the recorded result and winning set
// match what the moves produce.
ReplayResult replay(const Transcript& t);

// Deterministic serialization: equal transcripts give byte-equal strings.
std::string to_json(const Transcript& t);
Transcript transcript_from_json(const std::string& text); // throws std::invalid_argument

} // namespace apgame
