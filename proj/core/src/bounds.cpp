#include "apgame/bounds.hpp"

#include <cmath>
#include <string>

#include "apgame/errors.hpp"

namespace apgame {

std::string to_string(BoundKind kind) {
    switch (kind) {
    case BoundKind::KrssLower: return "krss-lower";
    case BoundKind::KrssUpper: return "krss-upper";
    case BoundKind::PaperLower: return "paper-lower";
    case BoundKind::PaperUpper: return "paper-upper";
    case BoundKind::BeckKAP: return "beck-kap";
    case BoundKind::SchurLower: return "schur-lower";
    case BoundKind::SchurUpper: return "schur-upper";
    case BoundKind::CyclicUpper: return "cyclic-upper";
    }
    throw UnknownStrategy("unknown bound kind");
}

BoundKind parse_bound_kind(std::string_view text) {
    for (BoundKind kind : kAllBoundKinds) {
        if (to_string(kind) == text) return kind;
    }
    throw UnknownStrategy("unknown bound kind: " + std::string(text));
}

double evaluate_bound(BoundKind kind, long long n, int k) {
    if (n < 1) throw OutOfRange("bound needs n >= 1");
    const double nd = static_cast<double>(n);
    switch (kind) {
    case BoundKind::KrssLower:
        if (n < 2) throw OutOfRange("krss-lower needs n >= 2");
        return std::sqrt(nd / 12.0 - 1.0 / 6.0);
    case BoundKind::KrssUpper:
        return std::sqrt(3.0 * nd);
    case BoundKind::PaperLower:
        return std::sqrt(nd / (3.0 + 1.5 * std::sqrt(3.0)));
    case BoundKind::PaperUpper:
        return std::sqrt(2.0 * nd);
    case BoundKind::BeckKAP: {
        if (k < 3) throw OutOfRange("beck-kap needs k >= 3");
        const double kd = static_cast<double>(k);
        const double base = nd / (kd * (kd - 1.0) * (kd - 1.0));
        return std::pow(base, 1.0 / (kd - 1.0));
    }
    case BoundKind::SchurLower:
        return std::sqrt(nd / 8.0);
    case BoundKind::SchurUpper:
        return std::sqrt(2.0 * nd);
    case BoundKind::CyclicUpper:
        return std::sqrt(3.0 * nd);
    }
    throw UnknownStrategy("unknown bound kind");
}

double f_profile(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw OutOfRange("f_profile needs x in [0,1]");
    const double r2 = std::sqrt(2.0);
    return 3.0 / (r2 - x) * (2.0 / 3.0 - r2 * x + x * x / 2.0) + 2.0 * x;
}

} // namespace apgame
