#include "apgame/referee.hpp"

#include <algorithm>

#include <json.hpp>

namespace apgame {

using nlohmann::json;

std::string to_string(Side s) { return s == Side::Maker ? "maker" : "breaker"; }

Transcript play_game(const GameConfig& cfg) {
    cfg.validate();
    auto maker = make_maker(cfg);
    auto breaker = make_breaker(cfg);
    return play_game(cfg, *maker, *breaker);
}

Transcript play_game(const GameConfig& cfg, MakerStrategy& maker, BreakerStrategy& breaker) {
    cfg.validate();
    GameState s(cfg.n);
    Transcript t;
    t.config = cfg;

    for (;;) {
        if (s.unclaimed_count() == 0) {
            t.result = Winner::Breaker;
            break;
        }
        Turn turn;
        turn.round = s.round() + 1;

        MakerDecision md;
        bool maker_ok = true;
        try {
            md = maker.next_move(s);
        } catch (const NoLegalMove&) {
            maker_ok = false;
        }
        if (maker_ok) maker_ok = md.pos >= 1 && md.pos <= cfg.n && s.unclaimed(md.pos);
        if (!maker_ok) {
            t.result = Winner::Breaker;
            t.forfeited_by = Side::Maker;
            break;
        }
        s.apply_maker_move(md.pos);
        turn.maker_move = md.pos;
        turn.events = md.events;

        if (auto ws = winning_set_through(s, cfg.family, md.pos)) {
            t.turns.push_back(std::move(turn));
            t.result = Winner::Maker;
            t.winning_set = std::move(ws);
            break;
        }
        if (s.unclaimed_count() == 0) {
            t.turns.push_back(std::move(turn));
            t.result = Winner::Breaker;
            break;
        }

        BreakerDecision bd;
        bool breaker_ok = true;
        try {
            bd = breaker.next_moves(s, md.pos);
        } catch (const NoLegalMove&) {
            breaker_ok = false;
        }
        std::vector<Pos> batch;
        if (breaker_ok) {
            batch = bd.batch();
            try {
                s.apply_breaker_moves(batch, cfg.q);
            } catch (const WrongBatchSize&) {
                breaker_ok = false;
            } catch (const OccupiedCell&) {
                breaker_ok = false;
            } catch (const OutOfRange&) {
                breaker_ok = false;
            }
        }
        if (!breaker_ok) {
            t.turns.push_back(std::move(turn));
            t.result = Winner::Maker;
            t.forfeited_by = Side::Breaker;
            break;
        }
        turn.breaker_moves = std::move(batch);
        for (const Event& e : bd.events) turn.events.push_back(e);
        t.turns.push_back(std::move(turn));
    }
    t.rounds_played = static_cast<int>(t.turns.size());
    return t;
}

namespace {

bool is_winning_set_vec(const FamilyKind& f, const std::vector<Pos>& w, int n) {
    if (static_cast<int>(w.size()) != f.set_size()) return false;
    std::vector<Pos> v = w;
    std::sort(v.begin(), v.end());
    if (v.front() < 1 || v.back() > n) return false;
    if (f.pair_queries_supported()) return is_winning_triple(f, v[0], v[1], v[2], n);
    // k-AP: strictly increasing with one common difference.
    Pos d = v[1] - v[0];
    if (d < 1) return false;
    for (size_t i = 2; i < v.size(); ++i)
        if (v[i] - v[i - 1] != d) return false;
    return true;
}

ReplayResult fail(int round, std::string reason) {
    ReplayResult r;
    r.valid = false;
    r.fail_round = round;
    r.reason = std::move(reason);
    return r;
}

} // namespace

ReplayResult replay(const Transcript& t) {
    try {
        t.config.validate();
    } catch (const std::exception& e) {
        return fail(0, std::string("bad config: ") + e.what());
    }
    GameState s(t.config.n);
    bool won = false;
    int middle_filled_count = 0;

    for (size_t i = 0; i < t.turns.size(); ++i) {
        const Turn& turn = t.turns[i];
        const int r = static_cast<int>(i) + 1;
        if (turn.round != r) return fail(turn.round, "round numbering broken");
        if (won) return fail(turn.round, "moves recorded after the game ended");
        for (const Event& e : turn.events)
            if (e.kind == EventKind::MiddleFilled && ++middle_filled_count > 1)
                return fail(turn.round, "MiddleFilled emitted more than once");

        if (turn.maker_move < 1 || turn.maker_move > t.config.n ||
            !s.unclaimed(turn.maker_move))
            return fail(turn.round, "illegal maker move " + std::to_string(turn.maker_move));
        s.apply_maker_move(turn.maker_move);

        if (auto ws = winning_set_through(s, t.config.family, turn.maker_move)) {
            won = true;
            if (!turn.breaker_moves.empty())
                return fail(turn.round, "breaker moves recorded after the winning move");
            continue;
        }

        const bool last = i + 1 == t.turns.size();
        if (last && t.forfeited_by == Side::Breaker && turn.breaker_moves.empty()) continue;
        try {
            s.apply_breaker_moves(turn.breaker_moves, t.config.q);
        } catch (const std::exception& e) {
            return fail(turn.round, std::string("illegal breaker batch: ") + e.what());
        }
    }

    Winner recomputed;
    if (won) {
        recomputed = Winner::Maker;
    } else if (t.forfeited_by.has_value()) {
        recomputed = *t.forfeited_by == Side::Maker ? Winner::Breaker : Winner::Maker;
    } else {
        if (s.unclaimed_count() != 0)
            return fail(static_cast<int>(t.turns.size()), "game stopped with unclaimed cells");
        recomputed = Winner::Breaker;
    }

    ReplayResult res;
    res.recomputed = recomputed;
    // Failures past this point still report the winner the moves produce.
    auto fail_checked = [&](int round, std::string reason) {
        ReplayResult r = fail(round, std::move(reason));
        r.recomputed = recomputed;
        return r;
    };
    if (t.result != recomputed)
        return fail_checked(static_cast<int>(t.turns.size()),
                            "recorded result " + to_string(t.result) + " but moves produce " +
                                to_string(recomputed));
    if (won) {
        if (!t.winning_set.has_value())
            return fail_checked(static_cast<int>(t.turns.size()),
                                "maker won but no winning set recorded");
        const auto& w = *t.winning_set;
        if (!is_winning_set_vec(t.config.family, w, t.config.n))
            return fail_checked(static_cast<int>(t.turns.size()),
                                "recorded winning set is not winning");
        for (Pos p : w)
            if (!s.maker_at(p))
                return fail_checked(static_cast<int>(t.turns.size()),
                                    "recorded winning set not fully claimed by maker");
    } else if (t.winning_set.has_value()) {
        return fail_checked(static_cast<int>(t.turns.size()),
                            "winning set recorded without a maker win");
    }
    if (t.rounds_played != static_cast<int>(t.turns.size()))
        return fail_checked(t.rounds_played, "rounds_played does not match the turn list");
    res.valid = true;
    return res;
}

namespace {

json event_to_json(const Event& e) {
    json j;
    j["kind"] = to_string(e.kind);
    j["round"] = e.round;
    switch (e.kind) {
        case EventKind::PivotFound:
            j["pivot"] = e.pivot;
            j["strength"] = e.strength;
            break;
        case EventKind::GuaranteeViolated:
            j["deficit"] = e.deficit;
            break;
        default: break;
    }
    return j;
}

Event event_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const int round = j.at("round").get<int>();
    if (kind == "MiddleFilled") return Event::middle_filled(round);
    if (kind == "ImmediateWinTaken") return Event::immediate_win_taken(round);
    if (kind == "PivotFound")
        return Event::pivot_found(round, j.at("pivot").get<Pos>(), j.at("strength").get<int>());
    if (kind == "GuaranteeViolated")
        return Event::guarantee_violated(round, j.at("deficit").get<int>());
    throw std::invalid_argument("unknown event kind: " + kind);
}

} // namespace

std::string to_json(const Transcript& t) {
    json j;
    json jc;
    jc["n"] = t.config.n;
    jc["q"] = t.config.q;
    jc["p"] = t.config.p;
    jc["family"] = to_string(t.config.family);
    jc["maker"] = t.config.maker_id;
    jc["breaker"] = t.config.breaker_id;
    jc["seed"] = t.config.seed;
    jc["opportunistic_win"] = t.config.opportunistic_win;
    jc["random_free_placement"] = t.config.random_free_placement;
    j["config"] = jc;
    json turns = json::array();
    for (const Turn& turn : t.turns) {
        json jt;
        jt["round"] = turn.round;
        jt["maker_move"] = turn.maker_move;
        jt["breaker_moves"] = turn.breaker_moves;
        json evs = json::array();
        for (const Event& e : turn.events) evs.push_back(event_to_json(e));
        jt["events"] = evs;
        turns.push_back(jt);
    }
    j["turns"] = turns;
    j["result"] = to_string(t.result);
    if (t.winning_set.has_value()) j["winning_set"] = *t.winning_set;
    j["rounds_played"] = t.rounds_played;
    if (t.forfeited_by.has_value()) j["forfeited_by"] = to_string(*t.forfeited_by);
    return j.dump(2) + "\n";
}

Transcript transcript_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("transcript is not valid JSON: ") + e.what());
    }
    try {
        Transcript t;
        const json& jc = j.at("config");
        t.config.n = jc.at("n").get<int>();
        t.config.q = jc.at("q").get<int>();
        t.config.p = jc.value("p", 1);
        auto fam = parse_family(jc.at("family").get<std::string>());
        if (!fam) throw std::invalid_argument("unknown family in transcript");
        t.config.family = *fam;
        t.config.maker_id = jc.at("maker").get<std::string>();
        t.config.breaker_id = jc.at("breaker").get<std::string>();
        t.config.seed = jc.at("seed").get<uint64_t>();
        t.config.opportunistic_win = jc.value("opportunistic_win", false);
        t.config.random_free_placement = jc.value("random_free_placement", false);
        for (const json& jt : j.at("turns")) {
            Turn turn;
            turn.round = jt.at("round").get<int>();
            turn.maker_move = jt.at("maker_move").get<Pos>();
            turn.breaker_moves = jt.at("breaker_moves").get<std::vector<Pos>>();
            for (const json& je : jt.at("events")) turn.events.push_back(event_from_json(je));
            t.turns.push_back(std::move(turn));
        }
        const std::string res = j.at("result").get<std::string>();
        if (res != "maker" && res != "breaker")
            throw std::invalid_argument("unknown result: " + res);
        t.result = res == "maker" ? Winner::Maker : Winner::Breaker;
        if (j.contains("winning_set"))
            t.winning_set = j.at("winning_set").get<std::vector<Pos>>();
        t.rounds_played = j.at("rounds_played").get<int>();
        if (j.contains("forfeited_by")) {
            const std::string f = j.at("forfeited_by").get<std::string>();
            if (f != "maker" && f != "breaker")
                throw std::invalid_argument("unknown forfeited_by: " + f);
            t.forfeited_by = f == "maker" ? Side::Maker : Side::Breaker;
        }
        return t;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("transcript missing fields: ") + e.what());
    }
}

} // namespace apgame
