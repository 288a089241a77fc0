#pragma once

#include <array>
#include <string>
#include <string_view>

#include "apgame/family.hpp"

namespace apgame {

// Closed-form threshold-bias bounds. Each evaluates to a real number of
// breaker moves per round; callers round as appropriate for their side.
enum class BoundKind {
    KrssLower,   // sqrt(n/12 - 1/6), needs n >= 2
    KrssUpper,   // sqrt(3n)
    PaperLower,  // sqrt(n / (3 + 1.5*sqrt(3)))
    PaperUpper,  // sqrt(2n)
    BeckKAP,     // (n / (k*(k-1)^2))^(1/(k-1)), needs k >= 3
    SchurLower,  // sqrt(n/8)
    SchurUpper,  // sqrt(2n)
    CyclicUpper, // sqrt(3n)
};

inline constexpr std::array<BoundKind, 8> kAllBoundKinds = {
    BoundKind::KrssLower,  BoundKind::KrssUpper,  BoundKind::PaperLower,
    BoundKind::PaperUpper, BoundKind::BeckKAP,    BoundKind::SchurLower,
    BoundKind::SchurUpper, BoundKind::CyclicUpper,
};

std::string to_string(BoundKind kind);
BoundKind parse_bound_kind(std::string_view text);

// k is consulted only by BeckKAP.
double evaluate_bound(BoundKind kind, long long n, int k = 3);

// Opening-ratio profile f(x) = 3/(sqrt(2)-x) * (2/3 - sqrt(2) x + x^2/2) + 2x
// on [0,1]; f(0) = sqrt(2) and f is nonincreasing, so every x in (0,1]
// improves on the x = 0 budget.
double f_profile(double x);

} // namespace apgame
