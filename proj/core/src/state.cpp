#include "apgame/state.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace apgame {

GameState::GameState(int n) : n_(n) {
    if (n < 1) throw OutOfRange("board size must be >= 1, got " + std::to_string(n));
    size_t words = (static_cast<size_t>(n) + 63) / 64;
    maker_.assign(words, 0);
    breaker_.assign(words, 0);
}

void GameState::check_range(Pos p) const {
    if (p < 1 || p > n_)
        throw OutOfRange("position " + std::to_string(p) + " outside [1, " + std::to_string(n_) +
                         "]");
}

Occupancy GameState::at(Pos p) const {
    check_range(p);
    if (maker_at(p)) return Occupancy::Maker;
    if (breaker_at(p)) return Occupancy::Breaker;
    return Occupancy::Unclaimed;
}

void GameState::apply_maker_move(Pos p) {
    check_range(p);
    if (!unclaimed(p)) throw OccupiedCell("cell " + std::to_string(p) + " is already claimed");
    set(maker_, p);
    maker_pts_.push_back(p);
}

void GameState::apply_breaker_moves(std::span<const Pos> batch, int q) {
    if (q < 1) throw WrongBatchSize("breaker bias must be >= 1, got " + std::to_string(q));
    const int expected = std::min(q, unclaimed_count());
    if (static_cast<int>(batch.size()) != expected)
        throw WrongBatchSize("breaker batch has " + std::to_string(batch.size()) +
                             " cells, expected " + std::to_string(expected));
    size_t applied = 0;
    try {
        for (Pos p : batch) {
            check_range(p);
            if (maker_at(p) || breaker_at(p)) {
                // Catches both previously claimed cells and in-batch repeats,
                // because earlier batch cells are already set below.
                throw OccupiedCell("cell " + std::to_string(p) + " is already claimed");
            }
            set(breaker_, p);
            ++applied;
        }
    } catch (...) {
        for (size_t i = 0; i < applied; ++i) clear(breaker_, batch[i]);
        throw;
    }
    breaker_pts_.insert(breaker_pts_.end(), batch.begin(), batch.end());
    ++round_;
}

Pos GameState::next_unclaimed(Pos from) const {
    if (from < 1) from = 1;
    if (from > n_) return 0;
    size_t w = static_cast<size_t>(from - 1) >> 6;
    const size_t words = maker_.size();
    uint64_t avail = ~(maker_[w] | breaker_[w]);
    avail &= ~0ull << ((from - 1) & 63);
    for (;;) {
        if (avail) {
            Pos p = static_cast<Pos>((w << 6) + static_cast<size_t>(std::countr_zero(avail))) + 1;
            return p <= n_ ? p : 0;
        }
        if (++w >= words) return 0;
        avail = ~(maker_[w] | breaker_[w]);
    }
}

Pos GameState::next_unclaimed_in(Pos from, Pos hi) const {
    Pos p = next_unclaimed(from);
    return (p != 0 && p <= hi) ? p : 0;
}

int GameState::unclaimed_in(Pos lo, Pos hi) const {
    if (lo < 1) lo = 1;
    if (hi > n_) hi = n_;
    if (lo > hi) return 0;
    size_t wl = static_cast<size_t>(lo - 1) >> 6, wh = static_cast<size_t>(hi - 1) >> 6;
    int total = 0;
    for (size_t w = wl; w <= wh; ++w) {
        uint64_t avail = ~(maker_[w] | breaker_[w]);
        if (w == wl) avail &= ~0ull << ((lo - 1) & 63);
        if (w == wh) {
            int top = (hi - 1) & 63;
            if (top != 63) avail &= (1ull << (top + 1)) - 1;
        }
        total += std::popcount(avail);
    }
    return total;
}

int GameState::breaker_in(Pos lo, Pos hi) const {
    if (lo < 1) lo = 1;
    if (hi > n_) hi = n_;
    if (lo > hi) return 0;
    size_t wl = static_cast<size_t>(lo - 1) >> 6, wh = static_cast<size_t>(hi - 1) >> 6;
    int total = 0;
    for (size_t w = wl; w <= wh; ++w) {
        uint64_t bits = breaker_[w];
        if (w == wl) bits &= ~0ull << ((lo - 1) & 63);
        if (w == wh) {
            int top = (hi - 1) & 63;
            if (top != 63) bits &= (1ull << (top + 1)) - 1;
        }
        total += std::popcount(bits);
    }
    return total;
}

std::vector<Pos> threats(const GameState& s, const FamilyKind& f) {
    std::vector<Pos> out;
    const auto& m = s.maker_points();
    for (size_t i = 0; i < m.size(); ++i) {
        for (size_t j = i + 1; j < m.size(); ++j) {
            for (Pos z : completions(f, m[i], m[j], s.n()))
                if (s.unclaimed(z)) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::vector<Pos>> winning_set_through(const GameState& s, const FamilyKind& f,
                                                   Pos p) {
    if (!s.maker_at(p)) return std::nullopt;
    if (f.pair_queries_supported()) {
        for (Pos y : s.maker_points()) {
            if (y == p) continue;
            for (Pos z : completions(f, p, y, s.n())) {
                if (s.maker_at(z)) {
                    std::vector<Pos> w{p, y, z};
                    std::sort(w.begin(), w.end());
                    return w;
                }
            }
        }
        return std::nullopt;
    }
    // k-AP, k > 3: try every progression through p.
    const int k = f.set_size(), n = s.n();
    for (int d = 1; static_cast<long long>(k - 1) * d <= n - 1; ++d) {
        for (int j = 0; j < k; ++j) {
            long long a = static_cast<long long>(p) - static_cast<long long>(j) * d;
            if (a < 1 || a + static_cast<long long>(k - 1) * d > n) continue;
            bool all = true;
            for (int i = 0; i < k && all; ++i)
                all = s.maker_at(static_cast<Pos>(a + static_cast<long long>(i) * d));
            if (all) {
                std::vector<Pos> w(static_cast<size_t>(k));
                for (int i = 0; i < k; ++i)
                    w[static_cast<size_t>(i)] = static_cast<Pos>(a + static_cast<long long>(i) * d);
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Pos>> find_winning_set(const GameState& s, const FamilyKind& f) {
    if (f.pair_queries_supported()) {
        const auto& m = s.maker_points();
        for (size_t i = 0; i < m.size(); ++i) {
            for (size_t j = i + 1; j < m.size(); ++j) {
                for (Pos z : completions(f, m[i], m[j], s.n())) {
                    if (s.maker_at(z)) {
                        std::vector<Pos> w{m[i], m[j], z};
                        std::sort(w.begin(), w.end());
                        return w;
                    }
                }
            }
        }
        return std::nullopt;
    }
    for (const auto& set : enumerate_winning_sets(f, s.n())) {
        bool all = true;
        for (Pos p : set)
            if (!s.maker_at(p)) {
                all = false;
                break;
            }
        if (all) return set;
    }
    return std::nullopt;
}

} // namespace apgame
