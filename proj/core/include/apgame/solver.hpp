#pragma once

#include <cstdint>

#include "apgame/referee.hpp"

namespace apgame {

// Exhaustive perfect-play search. The Breaker batch is sequentialized into
// single placements with no Maker move in between, which preserves the game
// value; the memo key is (maker mask, breaker mask, placements left in the
// current batch).
struct SolveOptions {
    int max_n = 16;                      // refuse larger boards (hard cap 24)
    uint64_t node_budget = 400'000'000;  // per worker; throws when exceeded
    bool root_symmetry = true;           // halve the root branching on mirror-symmetric families
    bool canonical_hashing = false;      // fold mirror states into one memo entry
    int workers = 1;                     // root-level parallelism, winner independent of it
};

struct SolveResult {
    Winner winner = Winner::Breaker;
    uint64_t nodes = 0;
    uint64_t table_entries = 0;
};

// Reflection i -> n + 1 - i maps every winning set onto a winning set
// (true for the progression families; false for Schur triples).
bool family_reflection_symmetric(const FamilyKind& f);

SolveResult solve(int n, int q, const FamilyKind& f, const SolveOptions& opts = {});

// Straight minimax over explicit Breaker batch subsets; no memo, no pruning,
// no symmetry. Cross-checks solve(). Guarded to n <= 10.
Winner naive_solve(int n, int q, const FamilyKind& f);

// Smallest q at which Breaker wins n under perfect play.
int exact_threshold(int n, const FamilyKind& f, const SolveOptions& opts = {});

} // namespace apgame
