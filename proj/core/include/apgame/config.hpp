#pragma once

#include <cstdint>
#include <string>

#include "apgame/family.hpp"

namespace apgame {

// Full description of one game; two runs with equal configs produce
// byte-identical transcripts.
struct GameConfig {
    int n = 0;
    int q = 1;
    int p = 1; // Maker bias; only p == 1 is supported
    FamilyKind family = FamilyKind::three_ap();
    std::string maker_id = "mid-third";
    std::string breaker_id = "block-all";
    uint64_t seed = 0;
    // Take an immediately winning cell in any phase instead of following the
    // scripted move. Off by default: the scripted play is the object of study.
    bool opportunistic_win = false;
    // Draw "arbitrary" (non-forced, non-scripted) placements uniformly at
    // random instead of lowest-unclaimed-first.
    bool random_free_placement = false;

    void validate() const; // throws std::invalid_argument on bad n/q/p
};

bool maker_id_known(const std::string& id);
bool breaker_id_known(const std::string& id);

} // namespace apgame
