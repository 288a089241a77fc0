#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "apgame/family.hpp"

namespace apgame {

enum class Occupancy : uint8_t { Unclaimed, Maker, Breaker };

// Board of a (1, q) Maker-Breaker game on [1, n]. Tracks both sides' claims
// in bitmasks plus move-ordered point lists. The round counter advances when
// the Breaker half of a round is applied.
class GameState {
public:
    explicit GameState(int n);

    int n() const { return n_; }
    int round() const { return round_; }

    bool maker_at(Pos p) const { return test(maker_, p); }
    bool breaker_at(Pos p) const { return test(breaker_, p); }
    bool unclaimed(Pos p) const { return !maker_at(p) && !breaker_at(p); }
    Occupancy at(Pos p) const;

    int claimed_count() const { return static_cast<int>(maker_pts_.size() + breaker_pts_.size()); }
    int unclaimed_count() const { return n_ - claimed_count(); }

    // Claims in the order they were made.
    const std::vector<Pos>& maker_points() const { return maker_pts_; }
    const std::vector<Pos>& breaker_points() const { return breaker_pts_; }

    // Throws OutOfRange / OccupiedCell. Does not advance the round counter.
    void apply_maker_move(Pos p);

    // Validates the whole batch (range, occupancy, in-batch duplicates, and
    // size == min(q, #unclaimed)) before mutating, then advances the round
    // counter. Throws OutOfRange / OccupiedCell / WrongBatchSize.
    void apply_breaker_moves(std::span<const Pos> batch, int q);

    // Smallest unclaimed position >= from (or in [from, hi]); 0 if none.
    Pos next_unclaimed(Pos from) const;
    Pos next_unclaimed_in(Pos from, Pos hi) const;

    // Number of unclaimed positions in [lo, hi].
    int unclaimed_in(Pos lo, Pos hi) const;

    // Number of Breaker cells in [lo, hi].
    int breaker_in(Pos lo, Pos hi) const;

    const std::vector<uint64_t>& maker_mask() const { return maker_; }
    const std::vector<uint64_t>& breaker_mask() const { return breaker_; }

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
    void check_range(Pos p) const;

    int n_;
    int round_ = 0;
    std::vector<uint64_t> maker_, breaker_;
    std::vector<Pos> maker_pts_, breaker_pts_;
};

// Unclaimed cells that complete a pair of Maker's points to a winning set,
// sorted ascending. Maker wins at once by claiming any of them; Breaker must
// block all of them to survive. Size-3 families only.
std::vector<Pos> threats(const GameState& s, const FamilyKind& f);

// Winning set fully claimed by Maker that contains p, if any; p must be a
// Maker point. O(|M|) for size-3 families; scans the family for k-APs.
std::optional<std::vector<Pos>> winning_set_through(const GameState& s, const FamilyKind& f, Pos p);

// Any winning set fully claimed by Maker.
std::optional<std::vector<Pos>> find_winning_set(const GameState& s, const FamilyKind& f);

inline bool maker_has_won(const GameState& s, const FamilyKind& f) {
    return find_winning_set(s, f).has_value();
}

} // namespace apgame
