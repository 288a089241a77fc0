#include "apgame/config.hpp"

#include <stdexcept>

namespace apgame {

void GameConfig::validate() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
    if (q < 1) throw std::invalid_argument("q must be >= 1, got " + std::to_string(q));
    if (p != 1) throw std::invalid_argument("only Maker bias p == 1 is supported");
    if (family.kind == Family::KAP && family.k < 3)
        throw std::invalid_argument("k-AP family requires k >= 3");
    if (!maker_id_known(maker_id)) throw UnknownStrategy("unknown maker strategy: " + maker_id);
    if (!breaker_id_known(breaker_id))
        throw UnknownStrategy("unknown breaker strategy: " + breaker_id);
}

bool maker_id_known(const std::string& id) {
    return id == "mid-third" || id == "greedy" || id == "random" || id == "human";
}

bool breaker_id_known(const std::string& id) {
    return id == "block-all" || id == "three-interval" || id == "random" || id == "human";
}

} // namespace apgame
