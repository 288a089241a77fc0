#include "apgame/greedy_engine.hpp"

#include <algorithm>
#include <bit>

namespace apgame {

GreedyEngine::GreedyEngine(int n, const FamilyKind& f) : n_(n), fam_(f) {
    if (!f.pair_queries_supported())
        throw UnsupportedFamily("greedy scoring needs pair completions: " + to_string(f));
    score_.assign(static_cast<size_t>(n) + 1, 0);
    size_t words = (static_cast<size_t>(n) + 63) / 64;
    maker_.assign(words, 0);
    breaker_.assign(words, 0);
    threat_.assign(words, 0);
}

void GreedyEngine::sync(const GameState& s) {
    const auto& mp = s.maker_points();
    const auto& bp = s.breaker_points();
    // Replay order need not match the real interleaving: the scores depend
    // only on the final claim sets, and each single-event update is exact for
    // whatever consistent pre-state it is applied to.
    for (; maker_seen_ < mp.size(); ++maker_seen_) process_maker(mp[maker_seen_]);
    for (; breaker_seen_ < bp.size(); ++breaker_seen_) process_breaker(bp[breaker_seen_]);
}

Pos GreedyEngine::min_supporter(Pos z, Pos w) const {
    CompletionSet cs = completions(fam_, z, w, n_);
    for (Pos c : cs)
        if (test(maker_, c)) return c;
    return 0;
}

bool GreedyEngine::has_supporter_excluding(Pos z, Pos w, Pos excluded) const {
    CompletionSet cs = completions(fam_, z, w, n_);
    for (Pos c : cs)
        if (c != excluded && test(maker_, c)) return true;
    return false;
}

void GreedyEngine::process_maker(Pos p) {
    // Whether p itself was still counted as a prospective threat cell.
    const bool p_was_candidate = unclaimed(p) && !test(threat_, p);

    // New threats Maker creates by playing p; mark immediately so the
    // mark doubles as the dedup filter.
    std::vector<Pos> fresh;
    for (Pos y : makers_) {
        for (Pos z : completions(fam_, p, y, n_)) {
            if (unclaimed(z) && !test(threat_, z)) {
                set(threat_, z);
                fresh.push_back(z);
            }
        }
    }

    // p stops being a countable w for every z it supported.
    if (p_was_candidate) {
        for (Pos y : makers_) {
            for (Pos z : completions(fam_, p, y, n_)) {
                if (unclaimed(z) && min_supporter(z, p) == y) --score_[static_cast<size_t>(z)];
            }
        }
    }

    // Cells that just became threats stop being countable w's as well.
    for (Pos w : fresh) {
        for (Pos y : makers_) {
            for (Pos z : completions(fam_, w, y, n_)) {
                if (z != p && unclaimed(z) && min_supporter(z, w) == y)
                    --score_[static_cast<size_t>(z)];
            }
        }
    }

    set(maker_, p);
    score_[static_cast<size_t>(p)] = kDead;
    if (test(threat_, p)) clear(threat_, p);
    makers_.push_back(p);

    // p newly supports pairs (z, w): count w for z where no other Maker point
    // already did and w is still a live candidate.
    const size_t words = maker_.size();
    for (size_t wi = 0; wi < words; ++wi) {
        uint64_t avail = ~(maker_[wi] | breaker_[wi]);
        if (wi == words - 1) {
            int top = (n_ - 1) & 63;
            if (top != 63) avail &= (1ull << (top + 1)) - 1;
        }
        while (avail) {
            Pos z = static_cast<Pos>((wi << 6) + static_cast<size_t>(std::countr_zero(avail))) + 1;
            avail &= avail - 1;
            for (Pos w : completions(fam_, z, p, n_)) {
                if (unclaimed(w) && !test(threat_, w) && !has_supporter_excluding(z, w, p))
                    ++score_[static_cast<size_t>(z)];
            }
        }
    }
}

void GreedyEngine::process_breaker(Pos c) {
    if (unclaimed(c) && !test(threat_, c)) {
        for (Pos y : makers_) {
            for (Pos z : completions(fam_, c, y, n_)) {
                if (unclaimed(z) && min_supporter(z, c) == y) --score_[static_cast<size_t>(z)];
            }
        }
    }
    set(breaker_, c);
    score_[static_cast<size_t>(c)] = kDead;
    if (test(threat_, c)) clear(threat_, c);
}

Pos GreedyEngine::best() const {
    Pos best_pos = 0;
    int32_t best_score = kDead;
    const size_t words = maker_.size();
    for (size_t wi = 0; wi < words; ++wi) {
        uint64_t avail = ~(maker_[wi] | breaker_[wi]);
        if (wi == words - 1) {
            int top = (n_ - 1) & 63;
            if (top != 63) avail &= (1ull << (top + 1)) - 1;
        }
        while (avail) {
            Pos z = static_cast<Pos>((wi << 6) + static_cast<size_t>(std::countr_zero(avail))) + 1;
            avail &= avail - 1;
            if (score_[static_cast<size_t>(z)] > best_score) {
                best_score = score_[static_cast<size_t>(z)];
                best_pos = z;
            }
        }
    }
    if (best_pos == 0) throw NoLegalMove("board is full");
    return best_pos;
}

int brute_greedy_score(const GameState& s, const FamilyKind& f, Pos z) {
    if (!s.unclaimed(z)) return std::numeric_limits<int32_t>::min();
    std::vector<Pos> existing = threats(s, f);
    std::vector<Pos> counted;
    for (Pos m : s.maker_points()) {
        for (Pos w : completions(f, z, m, s.n())) {
            if (s.unclaimed(w) && !std::binary_search(existing.begin(), existing.end(), w))
                counted.push_back(w);
        }
    }
    std::sort(counted.begin(), counted.end());
    counted.erase(std::unique(counted.begin(), counted.end()), counted.end());
    return static_cast<int>(counted.size());
}

} // namespace apgame
