#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "apgame/state.hpp"

namespace apgame {

// Maintains, for every unclaimed cell z, the number of *new* threats Maker
// would create by playing z: unclaimed cells w, not already threats, such
// that {z, m, w} is a winning set for some Maker point m (set semantics --
// each w counts once however many Maker points support it).
//
// Scores are a pure function of the pair of claim sets, maintained
// incrementally so a full greedy game costs far less than recomputing the
// O(n * |M|) table each round. Size-3 families only.
class GreedyEngine {
public:
    GreedyEngine(int n, const FamilyKind& f);

    // Absorbs all moves present in s but not yet seen. The engine is driven
    // with monotonically growing states of one game (any number of rounds may
    // have passed since the last sync).
    void sync(const GameState& s);

    // Highest-scoring unclaimed cell, smallest position on ties.
    // Throws NoLegalMove on a full board.
    Pos best() const;

    // Testing hooks. score() is meaningful for unclaimed cells.
    int score(Pos z) const { return score_[static_cast<size_t>(z)]; }
    bool is_threat(Pos z) const { return test(threat_, z); }

private:
    static bool test(const std::vector<uint64_t>& m, Pos p) {
        return (m[static_cast<size_t>(p - 1) >> 6] >> ((p - 1) & 63)) & 1u;
    }
    static void set(std::vector<uint64_t>& m, Pos p) {
        m[static_cast<size_t>(p - 1) >> 6] |= 1ull << ((p - 1) & 63);
    }
    static void clear(std::vector<uint64_t>& m, Pos p) {
        m[static_cast<size_t>(p - 1) >> 6] &= ~(1ull << ((p - 1) & 63));
    }
    bool unclaimed(Pos p) const { return !test(maker_, p) && !test(breaker_, p); }

    // Smallest Maker point completing (z, w) to a winning set, or 0. The
    // completion sets are sorted, so the first hit is the minimum; decrements
    // keyed on "y is that minimum" fire exactly once per (z, w) pair.
    Pos min_supporter(Pos z, Pos w) const;
    bool has_supporter_excluding(Pos z, Pos w, Pos excluded) const;

    void process_maker(Pos p);
    void process_breaker(Pos c);

    static constexpr int32_t kDead = std::numeric_limits<int32_t>::min();

    int n_;
    FamilyKind fam_;
    std::vector<int32_t> score_;            // 1-based; kDead once claimed
    std::vector<uint64_t> maker_, breaker_; // engine's own claim masks
    std::vector<uint64_t> threat_;
    std::vector<Pos> makers_;
    size_t maker_seen_ = 0, breaker_seen_ = 0;
};

// Reference implementation of the same score, recomputed from scratch.
int brute_greedy_score(const GameState& s, const FamilyKind& f, Pos z);

} // namespace apgame
