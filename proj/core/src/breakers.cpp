#include "apgame/breakers.hpp"

#include <algorithm>

namespace apgame {

std::vector<Pos> forced_blocks(const GameState& s, const FamilyKind& f, Pos last_maker) {
    if (!f.pair_queries_supported())
        throw UnsupportedFamily("forced blocks need pair completions: " + to_string(f));
    std::vector<Pos> out;
    for (Pos y : s.maker_points()) {
        if (y == last_maker) continue;
        for (Pos z : completions(f, last_maker, y, s.n()))
            if (s.unclaimed(z)) out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void init_pool(std::vector<Pos>& pool, Pos lo, Pos hi) {
    pool.clear();
    pool.reserve(static_cast<size_t>(hi - lo + 1));
    for (Pos p = lo; p <= hi; ++p) pool.push_back(p);
}

} // namespace

BreakerBlockAll::BreakerBlockAll(const GameConfig& cfg)
    : cfg_(cfg), rng_(derive_seed(cfg.seed, 2)) {
    if (!cfg.family.pair_queries_supported())
        throw UnsupportedFamily("block-all needs pair completions: " + to_string(cfg.family));
    batch_mark_.assign(static_cast<size_t>(cfg.n) + 1, 0);
    if (cfg_.random_free_placement) init_pool(pool_, 1, cfg.n);
}

BreakerDecision BreakerBlockAll::next_moves(const GameState& s, Pos last_maker) {
    const int r = s.round() + 1;
    ++epoch_;
    BreakerDecision d;
    d.forced = forced_blocks(s, cfg_.family, last_maker);
    const int budget = std::min(cfg_.q, s.unclaimed_count());
    const int demand = static_cast<int>(d.forced.size());
    if (demand > budget) {
        d.events.push_back(Event::guarantee_violated(r, demand - budget));
        d.forced.resize(static_cast<size_t>(budget));
    }
    for (Pos p : d.forced) batch_mark_[static_cast<size_t>(p)] = epoch_;
    int need = budget - static_cast<int>(d.forced.size());
    if (cfg_.random_free_placement) {
        while (need > 0 && !pool_.empty()) {
            size_t idx = pool_.size() == 1 ? 0 : static_cast<size_t>(rng_.bounded(pool_.size()));
            Pos p = pool_[idx];
            if (!s.unclaimed(p) || batch_mark_[static_cast<size_t>(p)] == epoch_) {
                pool_[idx] = pool_.back();
                pool_.pop_back();
                continue;
            }
            batch_mark_[static_cast<size_t>(p)] = epoch_;
            d.free.push_back(p);
            --need;
        }
    } else {
        Pos z = s.next_unclaimed(free_cursor_);
        while (need > 0 && z != 0) {
            if (batch_mark_[static_cast<size_t>(z)] != epoch_) {
                batch_mark_[static_cast<size_t>(z)] = epoch_;
                d.free.push_back(z);
                free_cursor_ = z + 1;
                --need;
            }
            z = s.next_unclaimed(z + 1);
        }
    }
    if (need > 0) throw NoLegalMove("breaker could not fill its batch");
    return d;
}

BreakerThreeInterval::BreakerThreeInterval(const GameConfig& cfg)
    : cfg_(cfg), thirds_(ThirdsScheme::of(cfg.n)), rng_(derive_seed(cfg.seed, 2)) {
    if (!cfg.family.pair_queries_supported())
        throw UnsupportedFamily("three-interval needs pair completions: " + to_string(cfg.family));
    mid_cursor_ = thirds_.i1_end + 1;
    right_cursor_ = thirds_.i2_end + 1;
    batch_mark_.assign(static_cast<size_t>(cfg.n) + 1, 0);
    if (cfg_.random_free_placement) {
        init_pool(pool_left_, 1, thirds_.i1_end);
        init_pool(pool_mid_, thirds_.i1_end + 1, thirds_.i2_end);
        init_pool(pool_right_, thirds_.i2_end + 1, cfg.n);
        init_pool(pool_any_, 1, cfg.n);
    }
}

Pos BreakerThreeInterval::take_from(const GameState& s, Pos* cursor, Pos hi) {
    Pos z = s.next_unclaimed(*cursor);
    while (z != 0 && z <= hi && in_batch(z)) z = s.next_unclaimed(z + 1);
    if (z == 0 || z > hi) return 0;
    *cursor = z + 1;
    return z;
}

Pos BreakerThreeInterval::draw_from_pool(const GameState& s, std::vector<Pos>& pool) {
    while (!pool.empty()) {
        size_t idx = pool.size() == 1 ? 0 : static_cast<size_t>(rng_.bounded(pool.size()));
        Pos p = pool[idx];
        if (s.unclaimed(p) && !in_batch(p)) return p;
        pool[idx] = pool.back();
        pool.pop_back();
    }
    return 0;
}

BreakerDecision BreakerThreeInterval::next_moves(const GameState& s, Pos last_maker) {
    const int r = s.round() + 1;
    ++epoch_;
    BreakerDecision d;

    // Quarters bookkeeping: when Maker's max point grows, Breaker cells
    // between the old and new split move from J3 to J2.
    const Pos j1_end = (cfg_.n + 2) / 3, j3_end = 2 * cfg_.n / 3;
    const Pos old_eff = std::min(std::max(ell_, j1_end), j3_end);
    ell_ = std::max(ell_, last_maker);
    const Pos new_eff = std::min(std::max(ell_, j1_end), j3_end);
    if (new_eff > old_eff) {
        int shift = s.breaker_in(old_eff + 1, new_eff);
        b_quarter_[2] += shift;
        b_quarter_[3] -= shift;
    }
    ++m_count_[thirds_.interval_of(last_maker)];

    d.forced = forced_blocks(s, cfg_.family, last_maker);
    const int budget = std::min(cfg_.q, s.unclaimed_count());
    const int demand = static_cast<int>(d.forced.size());
    if (demand > budget) {
        d.events.push_back(Event::guarantee_violated(r, demand - budget));
        d.forced.resize(static_cast<size_t>(budget));
    }
    int in_mid_batch = 0;
    for (Pos p : d.forced) {
        mark(p);
        if (thirds_.interval_of(p) == 2) ++in_mid_batch;
    }

    int need = budget - static_cast<int>(d.forced.size());
    auto fill_from = [&](int interval) {
        while (need > 0) {
            Pos z;
            if (cfg_.random_free_placement) {
                auto& pool = interval == 1 ? pool_left_ : (interval == 2 ? pool_mid_ : pool_right_);
                z = draw_from_pool(s, pool);
            } else {
                Pos* cursor =
                    interval == 1 ? &left_cursor_ : (interval == 2 ? &mid_cursor_ : &right_cursor_);
                z = take_from(s, cursor, thirds_.hi(interval));
            }
            if (z == 0) return;
            mark(z);
            if (interval == 2) ++in_mid_batch;
            d.free.push_back(z);
            --need;
        }
    };
    auto fill_anywhere = [&]() {
        while (need > 0) {
            Pos z = cfg_.random_free_placement ? draw_from_pool(s, pool_any_)
                                               : take_from(s, &any_cursor_, cfg_.n);
            if (z == 0) throw NoLegalMove("breaker could not fill its batch");
            mark(z);
            if (thirds_.interval_of(z) == 2) ++in_mid_batch;
            d.free.push_back(z);
            --need;
        }
    };

    if (phase_ == Phase::FillingMiddle) {
        fill_from(2);
    } else {
        const int side = thirds_.interval_of(last_maker);
        if (side != 2) fill_from(side);
    }
    fill_anywhere();

    // Capacity guarantee, monitored on every round strictly after t*:
    // 3 * m_side(t) + 2 * m2(t*) must stay within the bias.
    if (t_star_ != 0 && r > t_star_) {
        const int side = thirds_.interval_of(last_maker);
        if (side != 2) {
            const int cap = 3 * m_count_[side] + 2 * m2_at_tstar_;
            if (cap > cfg_.q) d.events.push_back(Event::guarantee_violated(r, cap - cfg_.q));
        }
    }

    if (t_star_ == 0 &&
        s.unclaimed_in(thirds_.i1_end + 1, thirds_.i2_end) - in_mid_batch == 0) {
        t_star_ = r;
        m2_at_tstar_ = m_count_[2];
        phase_ = Phase::PostMiddle;
        d.events.push_back(Event::middle_filled(r));
    }

    QuartersScheme quart = QuartersScheme::of(cfg_.n, ell_);
    for (Pos p : d.forced) ++b_quarter_[quart.interval_of(p)];
    for (Pos p : d.free) ++b_quarter_[quart.interval_of(p)];
    RoundStats st;
    st.round = r;
    st.m1 = m_count_[1];
    st.m2 = m_count_[2];
    st.m3 = m_count_[3];
    st.b1 = b_quarter_[1];
    st.b2 = b_quarter_[2];
    st.b3 = b_quarter_[3];
    st.b4 = b_quarter_[4];
    st.threats_created = demand;
    log_.push_back(st);
    return d;
}

BreakerRandom::BreakerRandom(const GameConfig& cfg) : cfg_(cfg), rng_(derive_seed(cfg.seed, 2)) {
    batch_mark_.assign(static_cast<size_t>(cfg.n) + 1, 0);
    init_pool(pool_, 1, cfg.n);
}

BreakerDecision BreakerRandom::next_moves(const GameState& s, Pos last_maker) {
    (void)last_maker;
    ++epoch_;
    BreakerDecision d;
    int need = std::min(cfg_.q, s.unclaimed_count());
    while (need > 0) {
        if (pool_.empty()) throw NoLegalMove("breaker could not fill its batch");
        size_t idx = pool_.size() == 1 ? 0 : static_cast<size_t>(rng_.bounded(pool_.size()));
        Pos p = pool_[idx];
        if (!s.unclaimed(p) || batch_mark_[static_cast<size_t>(p)] == epoch_) {
            pool_[idx] = pool_.back();
            pool_.pop_back();
            continue;
        }
        batch_mark_[static_cast<size_t>(p)] = epoch_;
        d.free.push_back(p);
        --need;
    }
    return d;
}

} // namespace apgame
