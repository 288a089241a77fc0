#include "apgame/makers.hpp"

#include <algorithm>
#include <cmath>

namespace apgame {

int opening_budget(int q) { return static_cast<int>(std::ceil(kOpeningRatio * q)); }

namespace {

// Smallest immediately winning cell, if any (with the Maker to move, every
// unclaimed completion of a Maker pair wins on the spot).
std::optional<Pos> immediate_win_cell(const GameState& s, const FamilyKind& f) {
    if (!f.pair_queries_supported()) return std::nullopt;
    std::vector<Pos> th = threats(s, f);
    if (th.empty()) return std::nullopt;
    return th.front();
}

} // namespace

PivotCandidate pivot_candidate(const GameState& s, Pos i) {
    PivotCandidate c;
    c.pivot = i;
    const int n = s.n();
    for (Pos y : s.maker_points()) {
        Pos refl[2] = {2 * y - i, 2 * i - y};
        for (Pos e : refl)
            if (e >= 1 && e <= n) c.reflections.push_back(e);
    }
    std::sort(c.reflections.begin(), c.reflections.end());
    c.reflections.erase(std::unique(c.reflections.begin(), c.reflections.end()),
                        c.reflections.end());
    for (Pos e : c.reflections) {
        if (s.maker_at(e)) c.immediate_win = true;
        if (!s.breaker_at(e)) c.open.push_back(e);
    }
    c.strength = static_cast<int>(c.open.size());
    return c;
}

std::optional<PivotCandidate> find_pivot(const GameState& s) {
    const auto& m = s.maker_points();
    if (m.empty()) return std::nullopt;
    const int n = s.n();
    const Pos ell = *std::max_element(m.begin(), m.end());
    const Pos j3_hi = 2 * n / 3;

    Pos best_i = 0;
    int best_strength = -1;
    // Counting pass only; the winner is rebuilt in full afterwards.
    for (Pos i = s.next_unclaimed_in(ell + 1, j3_hi); i != 0;
         i = s.next_unclaimed_in(i + 1, j3_hi)) {
        int strength = 0;
        bool immediate = false;
        for (Pos y : m) {
            const Pos e1 = 2 * y - i;
            if (e1 >= 1 && e1 <= n) {
                if (s.maker_at(e1)) immediate = true;
                if (!s.breaker_at(e1)) ++strength;
            }
            const Pos e2 = 2 * i - y;
            if (e2 >= 1 && e2 <= n) {
                if (s.maker_at(e2)) immediate = true;
                // Count e2 unless it doubles as a left reflection 2y' - i of
                // some Maker point y' (the element is already counted).
                if (!s.breaker_at(e2)) {
                    const Pos twice_y = e2 + i;
                    const bool dup = twice_y % 2 == 0 && twice_y / 2 >= 1 && twice_y / 2 <= n &&
                                     s.maker_at(twice_y / 2);
                    if (!dup) ++strength;
                }
            }
        }
        if (immediate) return pivot_candidate(s, i);
        if (strength > best_strength) {
            best_strength = strength;
            best_i = i;
        }
    }
    if (best_i == 0) return std::nullopt;
    return pivot_candidate(s, best_i);
}

MakerMidThird::MakerMidThird(const GameConfig& cfg)
    : cfg_(cfg),
      budget_(opening_budget(cfg.q)),
      cursor_((cfg.n + 2) / 3 + 1),
      rng_(derive_seed(cfg.seed, 1)) {}

Pos MakerMidThird::fallback_move(const GameState& s) {
    if (!cfg_.family.pair_queries_supported()) {
        Pos z = s.next_unclaimed(1);
        if (z == 0) throw NoLegalMove("board is full");
        return z;
    }
    if (!engine_) engine_ = std::make_unique<GreedyEngine>(cfg_.n, cfg_.family);
    engine_->sync(s);
    return engine_->best();
}

MakerDecision MakerMidThird::next_move(const GameState& s) {
    const int r = s.round() + 1;
    MakerDecision d;

    if (cfg_.opportunistic_win) {
        if (auto w = immediate_win_cell(s, cfg_.family)) {
            d.pos = *w;
            d.events.push_back(Event::immediate_win_taken(r));
            return d;
        }
    }

    if (phase_ == Phase::Opening && r > budget_) phase_ = Phase::Pivot;

    if (phase_ == Phase::Opening) {
        Pos z = s.next_unclaimed(cursor_);
        if (z != 0) {
            cursor_ = z + 1;
            d.pos = z;
            return d;
        }
        // Opening region exhausted early: move on to the pivot hunt.
        phase_ = Phase::Pivot;
    }

    if (phase_ == Phase::Pivot) {
        auto pv = find_pivot(s);
        if (pv && pv->immediate_win) {
            d.pos = pv->pivot;
            d.events.push_back(Event::immediate_win_taken(r));
            pivot_ = std::move(pv);
            phase_ = Phase::Endgame;
            return d;
        }
        if (pv && pv->strength > cfg_.q) {
            d.pos = pv->pivot;
            d.events.push_back(Event::pivot_found(r, pv->pivot, pv->strength));
            pivot_ = std::move(pv);
            phase_ = Phase::Endgame;
            return d;
        }
        // No pivot strong enough to beat the bias: outside the guarantee
        // regime, keep playing greedily instead of resigning.
        phase_ = Phase::Fallback;
    }

    if (phase_ == Phase::Endgame) {
        std::vector<Pos> live;
        for (Pos e : pivot_->open)
            if (s.unclaimed(e)) live.push_back(e);
        if (!live.empty()) {
            d.pos = cfg_.random_free_placement
                        ? live[rng_.bounded(live.size())]
                        : live.front();
            return d;
        }
        phase_ = Phase::Fallback;
    }

    d.pos = fallback_move(s);
    return d;
}

MakerGreedy::MakerGreedy(const GameConfig& cfg) : cfg_(cfg), engine_(cfg.n, cfg.family) {}

MakerDecision MakerGreedy::next_move(const GameState& s) {
    const int r = s.round() + 1;
    MakerDecision d;
    if (cfg_.opportunistic_win) {
        if (auto w = immediate_win_cell(s, cfg_.family)) {
            d.pos = *w;
            d.events.push_back(Event::immediate_win_taken(r));
            return d;
        }
    }
    engine_.sync(s);
    d.pos = engine_.best();
    return d;
}

MakerRandom::MakerRandom(const GameConfig& cfg) : cfg_(cfg), rng_(derive_seed(cfg.seed, 1)) {}

MakerDecision MakerRandom::next_move(const GameState& s) {
    const int r = s.round() + 1;
    MakerDecision d;
    if (cfg_.opportunistic_win) {
        if (auto w = immediate_win_cell(s, cfg_.family)) {
            d.pos = *w;
            d.events.push_back(Event::immediate_win_taken(r));
            return d;
        }
    }
    if (pool_.empty() && s.claimed_count() == 0) {
        pool_.reserve(static_cast<size_t>(s.n()));
        for (Pos p = 1; p <= s.n(); ++p) pool_.push_back(p);
    } else if (pool_.empty()) {
        for (Pos p = 1; p <= s.n(); ++p)
            if (s.unclaimed(p)) pool_.push_back(p);
    }
    while (!pool_.empty()) {
        size_t idx = rng_.bounded(pool_.size());
        Pos p = pool_[idx];
        if (s.unclaimed(p)) {
            d.pos = p;
            return d;
        }
        pool_[idx] = pool_.back();
        pool_.pop_back();
    }
    throw NoLegalMove("board is full");
}

} // namespace apgame
