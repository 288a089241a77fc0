#include "apgame/events.hpp"

namespace apgame {

std::string to_string(EventKind k) {
    switch (k) {
        case EventKind::MiddleFilled: return "MiddleFilled";
        case EventKind::PivotFound: return "PivotFound";
        case EventKind::GuaranteeViolated: return "GuaranteeViolated";
        case EventKind::ImmediateWinTaken: return "ImmediateWinTaken";
    }
    return "?";
}

} // namespace apgame
