#pragma once

#include <algorithm>

#include "apgame/family.hpp"

namespace apgame {

class GameState;

// Breaker's three-way split of [1, n]:
//   I1 = [1, floor(n/3)], I2 = (floor(n/3), ceil(2n/3)], I3 = (ceil(2n/3), n].
struct ThirdsScheme {
    int n = 0;
    Pos i1_end = 0; // last cell of I1
    Pos i2_end = 0; // last cell of I2

    static ThirdsScheme of(int n) {
        return {n, n / 3, (2 * n + 2) / 3};
    }
    int interval_of(Pos p) const {
        if (p <= i1_end) return 1;
        return p <= i2_end ? 2 : 3;
    }
    Pos lo(int i) const { return i == 1 ? 1 : (i == 2 ? i1_end + 1 : i2_end + 1); }
    Pos hi(int i) const { return i == 1 ? i1_end : (i == 2 ? i2_end : n); }
};

// Maker's four-way split, parameterized by its highest point l:
//   J1 = [1, ceil(n/3)], J2 = (ceil(n/3), l], J3 = (l, floor(2n/3)],
//   J4 = (floor(2n/3), n]. J2/J3 are empty when l is out of their ranges.
struct QuartersScheme {
    int n = 0;
    Pos j1_end = 0;
    Pos ell = 0;    // split point between J2 and J3
    Pos j3_end = 0;

    static QuartersScheme of(int n, Pos ell) {
        QuartersScheme s;
        s.n = n;
        s.j1_end = (n + 2) / 3;
        s.j3_end = 2 * n / 3;
        s.ell = std::min(std::max(ell, s.j1_end), s.j3_end);
        return s;
    }
    int interval_of(Pos p) const {
        if (p <= j1_end) return 1;
        if (p <= ell) return 2;
        return p <= j3_end ? 3 : 4;
    }
};

// Per-round occupancy snapshot used by the three-interval Breaker's log:
// Maker counts over the thirds, Breaker counts over the quarters.
struct RoundStats {
    int round = 0;
    int m1 = 0, m2 = 0, m3 = 0;
    int b1 = 0, b2 = 0, b3 = 0, b4 = 0;
    int threats_created = 0; // forced-move demand of the round
};

RoundStats round_stats(const GameState& s, Pos ell);

} // namespace apgame
