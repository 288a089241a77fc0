#pragma once

#include <iosfwd>

#include "apgame/strategy.hpp"

namespace apgame {

// Stdin/stdout (or any stream pair) adapters so a human can take either seat.
// Each prompt shows the round, the live threat cells, and the legal range;
// malformed or illegal entries re-prompt. EOF throws NoLegalMove.

class HumanMaker : public MakerStrategy {
public:
    HumanMaker(const GameConfig& cfg, std::istream& in, std::ostream& out);
    MakerDecision next_move(const GameState& s) override;

private:
    GameConfig cfg_;
    std::istream& in_;
    std::ostream& out_;
};

class HumanBreaker : public BreakerStrategy {
public:
    HumanBreaker(const GameConfig& cfg, std::istream& in, std::ostream& out);
    BreakerDecision next_moves(const GameState& s, Pos last_maker) override;

private:
    GameConfig cfg_;
    std::istream& in_;
    std::ostream& out_;
};

} // namespace apgame
