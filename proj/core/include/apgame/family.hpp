#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "apgame/errors.hpp"

namespace apgame {

// Board positions are 1-based integers in [1, n].
using Pos = int;

enum class Family { ThreeAP, KAP, CyclicThreeAP, SchurTriples };

// Winning-set family selector. k is meaningful only for KAP (k >= 3);
// KAP with k == 3 coincides with ThreeAP set-wise but keeps its own tag.
struct FamilyKind {
    Family kind = Family::ThreeAP;
    int k = 3;

    static FamilyKind three_ap() { return {Family::ThreeAP, 3}; }
    static FamilyKind k_ap(int k) { return {Family::KAP, k}; }
    static FamilyKind cyclic() { return {Family::CyclicThreeAP, 3}; }
    static FamilyKind schur() { return {Family::SchurTriples, 3}; }

    int set_size() const { return kind == Family::KAP ? k : 3; }
    // Families whose sets have exactly three elements support pair queries.
    bool pair_queries_supported() const { return set_size() == 3; }

    bool operator==(const FamilyKind& o) const {
        if (kind != o.kind) return false;
        return kind != Family::KAP || k == o.k;
    }
    bool operator!=(const FamilyKind& o) const { return !(*this == o); }
};

// "3ap", "kap:5", "cyclic", "schur".
std::string to_string(const FamilyKind& f);
std::optional<FamilyKind> parse_family(const std::string& text);

// Result of a pair-completion query: at most four positions (a pair can sit
// inside four distinct cyclic 3-APs when n is even), sorted ascending.
struct CompletionSet {
    std::array<Pos, 4> v{};
    int count = 0;

    void push(Pos p) { v[static_cast<size_t>(count++)] = p; }
    const Pos* begin() const { return v.data(); }
    const Pos* end() const { return v.data() + count; }
    int size() const { return count; }
    bool empty() const { return count == 0; }
    Pos operator[](int i) const { return v[static_cast<size_t>(i)]; }
    bool contains(Pos p) const {
        for (int i = 0; i < count; ++i)
            if (v[static_cast<size_t>(i)] == p) return true;
        return false;
    }
};

// Every winning set of the family on [1, n], each sorted ascending, the list
// in lexicographic order. CyclicThreeAP requires n >= 3.
std::vector<std::vector<Pos>> enumerate_winning_sets(const FamilyKind& f, int n);

// All z in [1, n] \ {a, b} such that {a, b, z} is a winning set. Defined for
// the size-3 families only; throws UnsupportedFamily otherwise. a != b.
CompletionSet completions(const FamilyKind& f, Pos a, Pos b, int n);

// Whether the distinct triple {a, b, c} is a winning set (size-3 families).
bool is_winning_triple(const FamilyKind& f, Pos a, Pos b, Pos c, int n);

} // namespace apgame
