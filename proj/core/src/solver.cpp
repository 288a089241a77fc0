#include "apgame/solver.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <unordered_map>
#include <vector>

namespace apgame {

bool family_reflection_symmetric(const FamilyKind& f) {
    return f.kind != Family::SchurTriples;
}

namespace {

using Mask = uint32_t;

constexpr int kHardCap = 24;

struct SetSystem {
    int n = 0;
    int q = 0;
    Mask full = 0;
    std::vector<Mask> sets;
    std::vector<std::vector<int>> cell_sets; // set indices through each cell

    SetSystem(int n, int q, const FamilyKind& f) : n(n), q(q) {
        full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
        for (const auto& s : enumerate_winning_sets(f, n)) {
            Mask m = 0;
            for (Pos p : s) m |= Mask{1} << (p - 1);
            sets.push_back(m);
        }
        cell_sets.assign(static_cast<size_t>(n), {});
        for (size_t i = 0; i < sets.size(); ++i)
            for (int c = 0; c < n; ++c)
                if (sets[i] >> c & 1) cell_sets[static_cast<size_t>(c)].push_back(static_cast<int>(i));
    }

    Mask mirror(Mask m) const {
        Mask r = 0;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) r |= Mask{1} << (n - 1 - i);
        return r;
    }
};

enum : int8_t { kMaker = 1, kBreaker = 2 };

struct Search {
    const SetSystem& sys;
    bool canonical;
    uint64_t budget;
    uint64_t nodes = 0;
    std::unordered_map<uint64_t, int8_t> memo;

    Search(const SetSystem& s, bool canon, uint64_t budget) : sys(s), canonical(canon), budget(budget) {
        memo.reserve(1 << 16);
    }

    uint64_t key(Mask mm, Mask bm, int left) const {
        const int n = sys.n;
        uint64_t k = static_cast<uint64_t>(mm) | (static_cast<uint64_t>(bm) << n) |
                     (static_cast<uint64_t>(left) << (2 * n));
        if (!canonical) return k;
        Mask rm = sys.mirror(mm), rb = sys.mirror(bm);
        uint64_t k2 = static_cast<uint64_t>(rm) | (static_cast<uint64_t>(rb) << n) |
                      (static_cast<uint64_t>(left) << (2 * n));
        return std::min(k, k2);
    }

    // Cells ordered by how much live winning-set weight runs through them;
    // both sides use the same urgency measure.
    void order_cells(Mask free, Mask mm, Mask bm, std::vector<int>& out) const {
        out.clear();
        std::vector<std::pair<int64_t, int>> scored;
        Mask rest = free;
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            int64_t score = 0;
            for (int si : sys.cell_sets[static_cast<size_t>(c)]) {
                Mask s = sys.sets[static_cast<size_t>(si)];
                if (s & bm) continue;
                score += int64_t{1} << (2 * std::popcount(s & mm));
            }
            scored.emplace_back(score, c);
        }
        std::sort(scored.begin(), scored.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                  });
        for (auto& [sc, c] : scored) out.push_back(c);
    }

    int8_t run(Mask mm, Mask bm, int left) {
        if (++nodes > budget)
            throw NodeBudgetExceeded("exact solve passed " + std::to_string(budget) + " nodes");
        bool all_dead = true;
        for (Mask s : sys.sets) {
            if (s & bm) continue;
            all_dead = false;
            if ((s & ~mm) == 0) return kMaker;
        }
        if (all_dead) return kBreaker;
        const Mask free = sys.full & ~(mm | bm);
        if (free == 0) return kBreaker;

        const uint64_t k = key(mm, bm, left);
        if (auto it = memo.find(k); it != memo.end()) return it->second;

        std::vector<int> cells;
        order_cells(free, mm, bm, cells);
        int8_t result;
        if (left == 0) {
            // Maker to move; the following batch is min(q, cells left after it).
            result = kBreaker;
            const int next_left = std::min(sys.q, std::popcount(free) - 1);
            for (int c : cells) {
                if (run(mm | (Mask{1} << c), bm, next_left) == kMaker) {
                    result = kMaker;
                    break;
                }
            }
        } else {
            result = kMaker;
            for (int c : cells) {
                if (run(mm, bm | (Mask{1} << c), left - 1) == kBreaker) {
                    result = kBreaker;
                    break;
                }
            }
        }
        memo.emplace(k, result);
        return result;
    }
};

} // namespace

SolveResult solve(int n, int q, const FamilyKind& f, const SolveOptions& opts) {
    if (n < 1) throw OutOfRange("board size must be >= 1");
    if (q < 1) throw WrongBatchSize("breaker bias must be >= 1");
    const int cap = std::min(opts.max_n, kHardCap);
    if (n > cap)
        throw BoardTooLarge("exact solve limited to n <= " + std::to_string(cap) + ", got " +
                            std::to_string(n));

    SetSystem sys(n, q, f);
    SolveResult res;
    if (sys.sets.empty()) {
        res.winner = Winner::Breaker;
        res.nodes = 1;
        return res;
    }

    const bool symmetric = family_reflection_symmetric(f);
    const bool canonical = opts.canonical_hashing && symmetric;

    // Root: Maker's first move, optionally folded by mirror symmetry.
    std::vector<int> roots;
    const int root_hi = (opts.root_symmetry && symmetric) ? (n + 1) / 2 : n;
    for (int c = 0; c < root_hi; ++c) roots.push_back(c);

    const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(roots.size())));
    const int next_left = std::min(q, n - 1);
    if (workers == 1) {
        Search search(sys, canonical, opts.node_budget);
        res.winner = Winner::Breaker;
        for (int c : roots) {
            if (search.run(Mask{1} << c, 0, next_left) == kMaker) {
                res.winner = Winner::Maker;
                break;
            }
        }
        res.nodes = search.nodes;
        res.table_entries = search.memo.size();
        return res;
    }

    const uint64_t per_budget = opts.node_budget / static_cast<uint64_t>(workers) + 1;
    std::vector<std::future<SolveResult>> futs;
    for (int w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&, w]() {
            Search search(sys, canonical, per_budget);
            SolveResult part;
            part.winner = Winner::Breaker;
            for (size_t i = static_cast<size_t>(w); i < roots.size();
                 i += static_cast<size_t>(workers)) {
                if (search.run(Mask{1} << roots[i], 0, next_left) == kMaker) {
                    part.winner = Winner::Maker;
                    break;
                }
            }
            part.nodes = search.nodes;
            part.table_entries = search.memo.size();
            return part;
        }));
    }
    res.winner = Winner::Breaker;
    for (auto& fu : futs) {
        SolveResult part = fu.get();
        if (part.winner == Winner::Maker) res.winner = Winner::Maker;
        res.nodes += part.nodes;
        res.table_entries += part.table_entries;
    }
    return res;
}

namespace {

struct NaiveGame {
    int n;
    int q;
    std::vector<std::vector<Pos>> sets;

    bool maker_done(const std::vector<int8_t>& owner) const {
        for (const auto& s : sets) {
            bool all = true;
            for (Pos p : s)
                if (owner[static_cast<size_t>(p)] != kMaker) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    }

    // Maker to move.
    bool maker_wins(std::vector<int8_t>& owner) {
        for (Pos c = 1; c <= n; ++c) {
            if (owner[static_cast<size_t>(c)] != 0) continue;
            owner[static_cast<size_t>(c)] = kMaker;
            bool won = maker_done(owner);
            if (!won) {
                std::vector<Pos> free;
                for (Pos p = 1; p <= n; ++p)
                    if (owner[static_cast<size_t>(p)] == 0) free.push_back(p);
                if (free.empty()) {
                    won = false; // board exhausted without a Maker set
                } else {
                    const int k = std::min<int>(q, static_cast<int>(free.size()));
                    std::vector<Pos> batch;
                    won = !breaker_has_refutation(owner, free, 0, k, batch);
                }
            }
            owner[static_cast<size_t>(c)] = 0;
            if (won) return true;
        }
        return false;
    }

    // Does some size-k batch from free[start..] lead to a Breaker win?
    bool breaker_has_refutation(std::vector<int8_t>& owner, const std::vector<Pos>& free,
                                size_t start, int k, std::vector<Pos>& batch) {
        if (k == 0) {
            bool maker_can = maker_wins(owner);
            return !maker_can;
        }
        for (size_t i = start; i + static_cast<size_t>(k) <= free.size(); ++i) {
            owner[static_cast<size_t>(free[i])] = kBreaker;
            batch.push_back(free[i]);
            bool refuted = breaker_has_refutation(owner, free, i + 1, k - 1, batch);
            batch.pop_back();
            owner[static_cast<size_t>(free[i])] = 0;
            if (refuted) return true;
        }
        return false;
    }
};

} // namespace

Winner naive_solve(int n, int q, const FamilyKind& f) {
    if (n < 1) throw OutOfRange("board size must be >= 1");
    if (q < 1) throw WrongBatchSize("breaker bias must be >= 1");
    if (n > 10) throw BoardTooLarge("naive solve limited to n <= 10");
    NaiveGame g{n, q, enumerate_winning_sets(f, n)};
    if (g.sets.empty()) return Winner::Breaker;
    std::vector<int8_t> owner(static_cast<size_t>(n) + 1, 0);
    return g.maker_wins(owner) ? Winner::Maker : Winner::Breaker;
}

int exact_threshold(int n, const FamilyKind& f, const SolveOptions& opts) {
    for (int q = 1; q <= n; ++q) {
        if (solve(n, q, f, opts).winner == Winner::Breaker) return q;
    }
    throw std::logic_error("no breaking bias found up to q = n");
}

} // namespace apgame
