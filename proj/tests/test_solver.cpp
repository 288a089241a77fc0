#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "apgame/errors.hpp"
#include "apgame/solver.hpp"

using namespace apgame;

TEST_CASE("perfect play on the smallest interesting boards") {
    CHECK(solve(3, 1, FamilyKind::three_ap()).winner == Winner::Breaker);
    CHECK(solve(5, 1, FamilyKind::three_ap()).winner == Winner::Maker);
    CHECK(solve(5, 2, FamilyKind::three_ap()).winner == Winner::Breaker);
    CHECK(solve(1, 1, FamilyKind::three_ap()).winner == Winner::Breaker);
}

TEST_CASE("exact thresholds on [3, 12] for the progression game") {
    const std::vector<int> want = {1, 1, 2, 2, 2, 2, 2, 2, 2, 2};
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(exact_threshold(n, FamilyKind::three_ap()) == want[static_cast<size_t>(n - 3)]);
    }
}

TEST_CASE("exact thresholds on [3, 10] for the sum game") {
    const std::vector<int> want = {1, 1, 1, 1, 2, 2, 2, 2};
    for (int n = 3; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(exact_threshold(n, FamilyKind::schur()) == want[static_cast<size_t>(n - 3)]);
    }
}

TEST_CASE("memoized search agrees with the naive reference") {
    for (const FamilyKind& f : {FamilyKind::three_ap(), FamilyKind::schur()}) {
        for (int n = 3; n <= 7; ++n) {
            for (int q = 1; q <= 2; ++q) {
                CAPTURE(to_string(f));
                CAPTURE(n);
                CAPTURE(q);
                CHECK(solve(n, q, f).winner == naive_solve(n, q, f));
            }
        }
    }
}

TEST_CASE("solver options preserve the winner") {
    SolveOptions plain;
    plain.root_symmetry = false;
    SolveOptions sym;
    SolveOptions canon;
    canon.canonical_hashing = true;
    SolveOptions par;
    par.workers = 4;
    for (int n : {6, 9}) {
        Winner w = solve(n, 2, FamilyKind::three_ap(), plain).winner;
        CHECK(solve(n, 2, FamilyKind::three_ap(), sym).winner == w);
        CHECK(solve(n, 2, FamilyKind::three_ap(), canon).winner == w);
        CHECK(solve(n, 2, FamilyKind::three_ap(), par).winner == w);
    }
    // Sum triples are not mirror-symmetric; the solver must not fold them.
    CHECK_FALSE(family_reflection_symmetric(FamilyKind::schur()));
    CHECK(family_reflection_symmetric(FamilyKind::three_ap()));
    CHECK(family_reflection_symmetric(FamilyKind::cyclic()));
    SolveOptions scanon;
    scanon.canonical_hashing = true;
    CHECK(solve(8, 1, FamilyKind::schur(), scanon).winner ==
          naive_solve(8, 1, FamilyKind::schur()));
}

TEST_CASE("cyclic boards solve too") {
    CHECK(solve(5, 2, FamilyKind::cyclic()).winner == naive_solve(5, 2, FamilyKind::cyclic()));
    CHECK(solve(7, 1, FamilyKind::cyclic()).winner == naive_solve(7, 1, FamilyKind::cyclic()));
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(solve(0, 1, FamilyKind::three_ap()), OutOfRange);
    CHECK_THROWS_AS(solve(5, 0, FamilyKind::three_ap()), WrongBatchSize);
    CHECK_THROWS_AS(solve(17, 1, FamilyKind::three_ap()), BoardTooLarge); // default max_n 16
    SolveOptions wide;
    wide.max_n = 30; // clamped to the hard cap of 24
    CHECK_THROWS_AS(solve(25, 1, FamilyKind::three_ap(), wide), BoardTooLarge);
    CHECK_THROWS_AS(naive_solve(11, 1, FamilyKind::three_ap()), BoardTooLarge);

    SolveOptions tiny;
    tiny.node_budget = 10;
    CHECK_THROWS_AS(solve(12, 1, FamilyKind::three_ap(), tiny), NodeBudgetExceeded);
}

TEST_CASE("node accounting is reported") {
    auto r = solve(8, 2, FamilyKind::three_ap());
    CHECK(r.nodes > 0);
    CHECK(r.table_entries > 0);
}
