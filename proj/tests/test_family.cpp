#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "apgame/errors.hpp"
#include "apgame/family.hpp"

using namespace apgame;

namespace {

std::vector<Pos> to_vec(const CompletionSet& cs) {
    return std::vector<Pos>(cs.begin(), cs.end());
}

} // namespace

TEST_CASE("parse and print family selectors round-trip") {
    for (const char* name : {"3ap", "cyclic", "schur", "kap:3", "kap:7"}) {
        auto f = parse_family(name);
        REQUIRE(f.has_value());
        CHECK(to_string(*f) == name);
    }
    CHECK(parse_family("kap:2") == std::nullopt);
    CHECK(parse_family("kap:") == std::nullopt);
    CHECK(parse_family("kap:3x") == std::nullopt);
    CHECK(parse_family("4ap") == std::nullopt);
    CHECK(parse_family("") == std::nullopt);
    CHECK(FamilyKind::k_ap(3) != FamilyKind::three_ap()); // tag survives
    CHECK(FamilyKind::three_ap() == FamilyKind::three_ap());
    CHECK(FamilyKind::k_ap(4).set_size() == 4);
    CHECK_FALSE(FamilyKind::k_ap(4).pair_queries_supported());
    CHECK(FamilyKind::schur().pair_queries_supported());
}

TEST_CASE("3-AP enumeration is lexicographic and complete") {
    auto sets = enumerate_winning_sets(FamilyKind::three_ap(), 5);
    std::vector<std::vector<Pos>> want = {{1, 2, 3}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
    CHECK(sets == want);

    CHECK(enumerate_winning_sets(FamilyKind::three_ap(), 2).empty());

    // Count identity: sum over gaps d >= 1 of (n - 2d) terms.
    auto big = enumerate_winning_sets(FamilyKind::three_ap(), 100);
    CHECK(big.size() == 2450);
    CHECK(std::is_sorted(big.begin(), big.end()));
}

TEST_CASE("k-AP enumeration") {
    auto sets = enumerate_winning_sets(FamilyKind::k_ap(4), 10);
    // d=1: 7 starts, d=2: 4, d=3: 1.
    CHECK(sets.size() == 12);
    CHECK(sets.front() == std::vector<Pos>{1, 2, 3, 4});
    CHECK(sets.back() == std::vector<Pos>{7, 8, 9, 10});
    // kap:3 coincides set-wise with 3ap.
    CHECK(enumerate_winning_sets(FamilyKind::k_ap(3), 30) ==
          enumerate_winning_sets(FamilyKind::three_ap(), 30));
}

TEST_CASE("cyclic enumeration: distinct residue triples only") {
    CHECK(enumerate_winning_sets(FamilyKind::cyclic(), 2).empty());

    // Every 3-subset of Z/5 is a cyclic progression.
    auto five = enumerate_winning_sets(FamilyKind::cyclic(), 5);
    CHECK(five.size() == 10);

    auto eight = enumerate_winning_sets(FamilyKind::cyclic(), 8);
    std::set<std::vector<Pos>> uniq(eight.begin(), eight.end());
    CHECK(uniq.size() == eight.size()); // no duplicates
    CHECK(uniq.count({1, 2, 3}) == 1);
    CHECK(uniq.count({1, 3, 7}) == 1);  // wraps: 7, 1, 3 has common gap 2 mod 8
    CHECK(uniq.count({1, 2, 4}) == 0);
    for (const auto& s : eight) {
        CHECK(s.size() == 3);
        CHECK(is_winning_triple(FamilyKind::cyclic(), s[0], s[1], s[2], 8));
    }
}

TEST_CASE("schur enumeration lists x + y = z with x < y") {
    auto sets = enumerate_winning_sets(FamilyKind::schur(), 6);
    std::vector<std::vector<Pos>> want = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5},
                                          {1, 5, 6}, {2, 3, 5}, {2, 4, 6}};
    CHECK(sets == want);
}

TEST_CASE("3-AP completions: midpoint and both reflections, range-filtered") {
    CHECK(to_vec(completions(FamilyKind::three_ap(), 3, 5, 9)) == std::vector<Pos>{1, 4, 7});
    CHECK(to_vec(completions(FamilyKind::three_ap(), 5, 3, 9)) == std::vector<Pos>{1, 4, 7});
    // Odd-sum pair has no midpoint; low reflection falls off the board.
    CHECK(to_vec(completions(FamilyKind::three_ap(), 1, 2, 9)) == std::vector<Pos>{3});
    CHECK(to_vec(completions(FamilyKind::three_ap(), 2, 4, 4)) == std::vector<Pos>{3});
    CHECK(completions(FamilyKind::three_ap(), 1, 4, 4).empty());
    CHECK(completions(FamilyKind::three_ap(), 2, 2, 9).empty()); // degenerate pair
    // kap:3 answers pair queries like 3ap.
    CHECK(to_vec(completions(FamilyKind::k_ap(3), 3, 5, 9)) == std::vector<Pos>{1, 4, 7});
    CHECK_THROWS_AS(completions(FamilyKind::k_ap(4), 1, 2, 10), UnsupportedFamily);
}

TEST_CASE("cyclic completions can reach four cells on even boards") {
    CHECK(to_vec(completions(FamilyKind::cyclic(), 1, 3, 8)) == std::vector<Pos>{2, 5, 6, 7});
    CHECK(to_vec(completions(FamilyKind::cyclic(), 1, 3, 7)) == std::vector<Pos>{2, 5, 6});
    for (Pos z : completions(FamilyKind::cyclic(), 1, 3, 8))
        CHECK(is_winning_triple(FamilyKind::cyclic(), 1, 3, z, 8));
    // Cell n stands for residue 0.
    auto wrap = completions(FamilyKind::cyclic(), 8, 2, 8);
    for (Pos z : wrap) CHECK(is_winning_triple(FamilyKind::cyclic(), 8, 2, z, 8));
    CHECK(wrap.contains(5)); // 8(=0), 2, 5 is not an AP; 2, 5, 8 is
}

TEST_CASE("schur completions: sum and difference only") {
    CHECK(to_vec(completions(FamilyKind::schur(), 2, 5, 10)) == std::vector<Pos>{3, 7});
    CHECK(to_vec(completions(FamilyKind::schur(), 1, 2, 10)) == std::vector<Pos>{3});
    CHECK(to_vec(completions(FamilyKind::schur(), 3, 6, 20)) == std::vector<Pos>{9});
    CHECK(completions(FamilyKind::schur(), 2, 4, 5).empty());
    for (int n : {5, 17, 40}) {
        for (Pos a = 1; a <= n; ++a)
            for (Pos b = 1; b <= n; ++b) {
                if (a == b) continue;
                auto cs = completions(FamilyKind::schur(), a, b, n);
                CHECK(cs.size() <= 2);
                for (Pos z : cs) CHECK(is_winning_triple(FamilyKind::schur(), a, b, z, n));
            }
    }
}

TEST_CASE("winning-triple predicate is order-blind and rejects degenerates") {
    auto f3 = FamilyKind::three_ap();
    CHECK(is_winning_triple(f3, 1, 2, 3, 10));
    CHECK(is_winning_triple(f3, 3, 1, 2, 10));
    CHECK_FALSE(is_winning_triple(f3, 1, 2, 4, 10));
    CHECK_FALSE(is_winning_triple(f3, 2, 2, 4, 10));
    CHECK_FALSE(is_winning_triple(f3, 1, 2, 3, 2)); // outside the board

    CHECK(is_winning_triple(FamilyKind::cyclic(), 1, 3, 5, 8));
    CHECK(is_winning_triple(FamilyKind::cyclic(), 1, 3, 7, 8));
    CHECK_FALSE(is_winning_triple(FamilyKind::cyclic(), 1, 3, 8, 8));

    CHECK(is_winning_triple(FamilyKind::schur(), 2, 5, 7, 10));
    CHECK(is_winning_triple(FamilyKind::schur(), 7, 2, 5, 10));
    CHECK_FALSE(is_winning_triple(FamilyKind::schur(), 2, 3, 4, 10));
    CHECK_THROWS_AS(is_winning_triple(FamilyKind::k_ap(5), 1, 2, 3, 10), UnsupportedFamily);
}

TEST_CASE("completions agree with enumeration on every pair") {
    for (const FamilyKind& f :
         {FamilyKind::three_ap(), FamilyKind::cyclic(), FamilyKind::schur()}) {
        const int n = 24;
        auto sets = enumerate_winning_sets(f, n);
        for (Pos a = 1; a <= n; ++a)
            for (Pos b = a + 1; b <= n; ++b) {
                std::set<Pos> want;
                for (const auto& s : sets) {
                    bool ha = std::find(s.begin(), s.end(), a) != s.end();
                    bool hb = std::find(s.begin(), s.end(), b) != s.end();
                    if (ha && hb)
                        for (Pos z : s)
                            if (z != a && z != b) want.insert(z);
                }
                auto got = to_vec(completions(f, a, b, n));
                CHECK(std::set<Pos>(got.begin(), got.end()) == want);
            }
    }
}
