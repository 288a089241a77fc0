#pragma once

#include <string>

#include "apgame/family.hpp"

namespace apgame {

enum class EventKind { MiddleFilled, PivotFound, GuaranteeViolated, ImmediateWinTaken };

// Strategy-emitted annotation attached to the turn it happened in.
struct Event {
    EventKind kind = EventKind::MiddleFilled;
    int round = 0;    // all kinds
    Pos pivot = 0;    // PivotFound
    int strength = 0; // PivotFound
    int deficit = 0;  // GuaranteeViolated: demand minus claimed blocks

    static Event middle_filled(int round) { return {EventKind::MiddleFilled, round, 0, 0, 0}; }
    static Event pivot_found(int round, Pos i, int strength) {
        return {EventKind::PivotFound, round, i, strength, 0};
    }
    static Event guarantee_violated(int round, int deficit) {
        return {EventKind::GuaranteeViolated, round, 0, 0, deficit};
    }
    static Event immediate_win_taken(int round) {
        return {EventKind::ImmediateWinTaken, round, 0, 0, 0};
    }

    bool operator==(const Event&) const = default;
};

std::string to_string(EventKind k);

} // namespace apgame
