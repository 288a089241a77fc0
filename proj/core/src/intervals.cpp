#include "apgame/intervals.hpp"

#include "apgame/state.hpp"

namespace apgame {

RoundStats round_stats(const GameState& s, Pos ell) {
    ThirdsScheme thirds = ThirdsScheme::of(s.n());
    QuartersScheme quarters = QuartersScheme::of(s.n(), ell);
    RoundStats r;
    r.round = s.round();
    for (Pos p : s.maker_points()) {
        switch (thirds.interval_of(p)) {
            case 1: ++r.m1; break;
            case 2: ++r.m2; break;
            default: ++r.m3; break;
        }
    }
    for (Pos p : s.breaker_points()) {
        switch (quarters.interval_of(p)) {
            case 1: ++r.b1; break;
            case 2: ++r.b2; break;
            case 3: ++r.b3; break;
            default: ++r.b4; break;
        }
    }
    return r;
}

} // namespace apgame
