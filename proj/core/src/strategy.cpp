#include "apgame/strategy.hpp"

#include "apgame/breakers.hpp"
#include "apgame/makers.hpp"

namespace apgame {

std::unique_ptr<MakerStrategy> make_maker(const GameConfig& cfg) {
    if (cfg.maker_id == "mid-third") return std::make_unique<MakerMidThird>(cfg);
    if (cfg.maker_id == "greedy") return std::make_unique<MakerGreedy>(cfg);
    if (cfg.maker_id == "random") return std::make_unique<MakerRandom>(cfg);
    throw UnknownStrategy("no scripted maker strategy named '" + cfg.maker_id + "'");
}

std::unique_ptr<BreakerStrategy> make_breaker(const GameConfig& cfg) {
    if (cfg.breaker_id == "block-all") return std::make_unique<BreakerBlockAll>(cfg);
    if (cfg.breaker_id == "three-interval") return std::make_unique<BreakerThreeInterval>(cfg);
    if (cfg.breaker_id == "random") return std::make_unique<BreakerRandom>(cfg);
    throw UnknownStrategy("no scripted breaker strategy named '" + cfg.breaker_id + "'");
}

} // namespace apgame
