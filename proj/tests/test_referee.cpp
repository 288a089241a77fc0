#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "apgame/errors.hpp"
#include "apgame/referee.hpp"

using namespace apgame;

namespace {

// Plays a fixed script, then repeats the last move forever (forfeiting).
struct ScriptMaker : MakerStrategy {
    std::vector<Pos> script;
    size_t at = 0;
    explicit ScriptMaker(std::vector<Pos> s) : script(std::move(s)) {}
    MakerDecision next_move(const GameState&) override {
        MakerDecision d;
        d.pos = script[std::min(at, script.size() - 1)];
        ++at;
        return d;
    }
};

// Claims the lowest unclaimed cells; can be told to misbehave once.
struct StubBreaker : BreakerStrategy {
    int q;
    int misbehave_on = 0; // round whose batch comes back one short
    explicit StubBreaker(int q_) : q(q_) {}
    BreakerDecision next_moves(const GameState& s, Pos) override {
        BreakerDecision d;
        int want = std::min(q, s.unclaimed_count());
        if (s.round() + 1 == misbehave_on) --want;
        Pos z = s.next_unclaimed(1);
        while (want > 0 && z != 0) {
            d.free.push_back(z);
            --want;
            z = s.next_unclaimed(z + 1);
        }
        return d;
    }
};

GameConfig base_config(int n, int q) {
    GameConfig cfg;
    cfg.n = n;
    cfg.q = q;
    cfg.maker_id = "greedy";
    cfg.breaker_id = "random";
    cfg.seed = 11;
    return cfg;
}

} // namespace

TEST_CASE("a winning maker move ends the round without a breaker reply") {
    auto cfg = base_config(9, 1);
    ScriptMaker maker({3, 5, 7}); // 7 completes 3,5,7 unless blocked
    StubBreaker breaker(1);       // claims 1 then 2: never blocks
    Transcript t = play_game(cfg, maker, breaker);

    REQUIRE(t.result == Winner::Maker);
    REQUIRE(t.turns.size() == 3);
    CHECK(t.turns[2].breaker_moves.empty());
    CHECK(t.rounds_played == 3);
    CHECK_FALSE(t.forfeited_by.has_value());
    REQUIRE(t.winning_set.has_value());
    CHECK(*t.winning_set == std::vector<Pos>{3, 5, 7});
    CHECK(replay(t).valid);
}

TEST_CASE("an illegal maker move forfeits and is not recorded") {
    auto cfg = base_config(12, 2);
    ScriptMaker maker({4, 4}); // repeats a claimed cell on round 2
    StubBreaker breaker(2);
    Transcript t = play_game(cfg, maker, breaker);

    CHECK(t.result == Winner::Breaker);
    REQUIRE(t.forfeited_by.has_value());
    CHECK(*t.forfeited_by == Side::Maker);
    CHECK(t.turns.size() == 1); // the offending round never enters the record
    CHECK(t.rounds_played == 1);
    CHECK_FALSE(t.winning_set.has_value());
    CHECK(replay(t).valid);
}

TEST_CASE("a bad breaker batch forfeits with the maker move kept") {
    auto cfg = base_config(30, 3);
    ScriptMaker maker({10, 20, 15, 25});
    StubBreaker breaker(3);
    breaker.misbehave_on = 2;
    Transcript t = play_game(cfg, maker, breaker);

    CHECK(t.result == Winner::Maker);
    REQUIRE(t.forfeited_by.has_value());
    CHECK(*t.forfeited_by == Side::Breaker);
    REQUIRE(t.turns.size() == 2);
    CHECK(t.turns[1].maker_move == 20);
    CHECK(t.turns[1].breaker_moves.empty());
    CHECK_FALSE(t.winning_set.has_value());
    CHECK(replay(t).valid);
}

TEST_CASE("board exhaustion goes to the breaker") {
    auto cfg = base_config(4, 3);
    Transcript t = play_game(cfg);
    CHECK(t.result == Winner::Breaker);
    CHECK(t.turns.size() == 1);
    CHECK(t.turns[0].breaker_moves.size() == 3);
    CHECK_FALSE(t.forfeited_by.has_value());
    CHECK(replay(t).valid);
}

TEST_CASE("equal configs produce byte-identical transcripts") {
    for (auto [maker, breaker] : std::vector<std::pair<const char*, const char*>>{
             {"mid-third", "block-all"},
             {"random", "random"},
             {"greedy", "three-interval"}}) {
        GameConfig cfg;
        cfg.n = 120;
        cfg.q = 6;
        cfg.maker_id = maker;
        cfg.breaker_id = breaker;
        cfg.seed = 1234;
        cfg.random_free_placement = true;
        Transcript a = play_game(cfg);
        Transcript b = play_game(cfg);
        CHECK(to_json(a) == to_json(b));
        CHECK(replay(a).valid);
    }
}

TEST_CASE("transcripts survive a JSON round trip byte-for-byte") {
    GameConfig cfg;
    cfg.n = 60;
    cfg.q = 4;
    cfg.maker_id = "mid-third";
    cfg.breaker_id = "three-interval";
    cfg.seed = 7;
    Transcript t = play_game(cfg);
    std::string text = to_json(t);
    Transcript back = transcript_from_json(text);
    CHECK(to_json(back) == text);
    CHECK(back.config.n == 60);
    CHECK(back.result == t.result);
    CHECK(back.turns.size() == t.turns.size());
}

TEST_CASE("replay rejects tampered transcripts") {
    auto cfg = base_config(9, 1);
    ScriptMaker maker({3, 5, 7});
    StubBreaker breaker(1);
    const Transcript good = play_game(cfg, maker, breaker);
    REQUIRE(replay(good).valid);

    Transcript t = good;
    t.result = Winner::Breaker;
    t.winning_set.reset();
    auto r = replay(t);
    CHECK_FALSE(r.valid);
    CHECK(r.recomputed == Winner::Maker);

    t = good;
    t.turns[1].maker_move = t.turns[0].maker_move; // claimed cell
    CHECK_FALSE(replay(t).valid);
    CHECK(replay(t).fail_round == 2);

    t = good;
    t.turns[2].breaker_moves = {9}; // reply after the winning move
    CHECK_FALSE(replay(t).valid);

    t = good;
    t.turns.push_back(t.turns[0]); // play on after the game ended
    t.turns.back().round = 4;
    t.rounds_played = 4;
    CHECK_FALSE(replay(t).valid);

    t = good;
    t.rounds_played = 99;
    CHECK_FALSE(replay(t).valid);

    t = good;
    (*t.winning_set)[0] = 2; // {2,5,7} is not a progression
    CHECK_FALSE(replay(t).valid);

    t = good;
    t.turns[1].round = 7;
    CHECK_FALSE(replay(t).valid);

    t = good;
    t.turns[0].breaker_moves = {1, 2}; // wrong batch size for q=1
    CHECK_FALSE(replay(t).valid);
}

TEST_CASE("transcript parsing rejects garbage") {
    CHECK_THROWS_AS(transcript_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(transcript_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(transcript_from_json(R"({"config":{"n":5,"q":1,"family":"nope",
        "maker":"greedy","breaker":"random","seed":0},"turns":[],"result":"breaker",
        "rounds_played":0})"),
                    std::invalid_argument);
}

TEST_CASE("the referee enforces the config contract") {
    GameConfig cfg = base_config(0, 1);
    CHECK_THROWS_AS(play_game(cfg), std::invalid_argument);
    cfg = base_config(5, 0);
    CHECK_THROWS_AS(play_game(cfg), std::invalid_argument);
    cfg = base_config(5, 1);
    cfg.maker_id = "nonsense";
    CHECK_THROWS_AS(play_game(cfg), UnknownStrategy);
    cfg = base_config(5, 1);
    cfg.maker_id = "human"; // known id, but not constructible here
    CHECK_THROWS_AS(play_game(cfg), UnknownStrategy);
    cfg = base_config(5, 1);
    cfg.p = 2;
    CHECK_THROWS_AS(play_game(cfg), std::invalid_argument);
}
