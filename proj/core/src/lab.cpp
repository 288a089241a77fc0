#include "apgame/lab.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "apgame/breakers.hpp"
#include "apgame/errors.hpp"
#include "apgame/state.hpp"

namespace apgame {

namespace {

// Smallest integer s with s*s >= v.
long long ceil_isqrt(long long v) {
    if (v <= 0) return 0;
    long long s = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(v))));
    while (s > 0 && (s - 1) * (s - 1) >= v) --s;
    while (s * s < v) ++s;
    return s;
}

bool rounds_up(BoundKind kind) {
    switch (kind) {
    case BoundKind::KrssUpper:
    case BoundKind::PaperUpper:
    case BoundKind::SchurUpper:
    case BoundKind::CyclicUpper:
        return true;
    default:
        return false;
    }
}

} // namespace

ExperimentRecord summarize(const Transcript& t) {
    ReplayResult rr = replay(t);
    if (!rr.valid) {
        throw ReplayMismatch("transcript failed replay at round " + std::to_string(rr.fail_round) +
                             ": " + rr.reason);
    }

    ExperimentRecord rec;
    rec.n = t.config.n;
    rec.q = t.config.q;
    rec.family = t.config.family;
    rec.maker_id = t.config.maker_id;
    rec.breaker_id = t.config.breaker_id;
    rec.winner = t.result;
    rec.rounds_played = t.rounds_played;
    rec.seed = t.config.seed;

    const bool pair_queries = t.config.family.pair_queries_supported();
    GameState s(t.config.n);
    for (std::size_t i = 0; i < t.turns.size(); ++i) {
        const Turn& turn = t.turns[i];
        for (const Event& e : turn.events) {
            if (e.kind == EventKind::GuaranteeViolated) ++rec.guarantee_violations;
            if (e.kind == EventKind::MiddleFilled && !rec.t_star) rec.t_star = e.round;
        }
        s.apply_maker_move(turn.maker_move);
        // The Breaker never answers the winning move, so it adds no demand; a
        // forfeited batch still counts the demand the Breaker walked away from.
        const bool maker_won_here =
            i + 1 == t.turns.size() && t.result == Winner::Maker && !t.forfeited_by;
        if (pair_queries && !maker_won_here) {
            const auto forced = forced_blocks(s, t.config.family, turn.maker_move);
            rec.max_forced_demand =
                std::max(rec.max_forced_demand, static_cast<int>(forced.size()));
        }
        // Replay has already enforced the real batch-size rule, so the batch's
        // own size stands in for q here.
        if (!turn.breaker_moves.empty()) {
            s.apply_breaker_moves(turn.breaker_moves,
                                  static_cast<int>(turn.breaker_moves.size()));
        }
    }
    return rec;
}

ExperimentRecord run_experiment(const GameConfig& cfg) { return summarize(play_game(cfg)); }

int QRule::q_for(int n, std::size_t index) const {
    if (!explicit_qs.empty()) {
        if (index >= explicit_qs.size()) throw OutOfRange("q list shorter than n list");
        return explicit_qs[index];
    }
    const double v = scale * evaluate_bound(kind, n, k) + offset;
    const double rounded = rounds_up(kind) ? std::ceil(v) : std::floor(v);
    return std::max(1, static_cast<int>(rounded));
}

QRule parse_q_rule(std::string_view text) {
    QRule rule;
    std::string_view name = text;
    std::string_view rest;

    const auto star = text.find('*');
    // Bound names contain hyphens, so '-' only starts an offset when a number
    // follows; '+' always does.
    auto shift = std::string_view::npos;
    for (std::size_t i = star == std::string_view::npos ? 0 : star + 1; i < text.size(); ++i) {
        const char c = text[i];
        const bool minus_number = c == '-' && i + 1 < text.size() &&
                                  (std::isdigit(static_cast<unsigned char>(text[i + 1])) ||
                                   text[i + 1] == '.');
        if (c == '+' || minus_number) {
            shift = i;
            break;
        }
    }
    const auto name_end = std::min(star, shift);
    name = text.substr(0, name_end);

    rule.kind = parse_bound_kind(name);

    auto parse_num = [&](std::string_view v, const char* what) {
        double out = 0.0;
        const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
        if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
            throw OutOfRange(std::string("bad ") + what + " in q rule: " + std::string(text));
        }
        return out;
    };

    if (star != std::string_view::npos) {
        const auto stop = shift == std::string_view::npos ? text.size() : shift;
        rule.scale = parse_num(text.substr(star + 1, stop - star - 1), "scale");
    }
    if (shift != std::string_view::npos) {
        rest = text.substr(shift);
        // from_chars takes a '-' sign but not '+'.
        if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
        rule.offset = parse_num(rest, "offset");
    }
    return rule;
}

SweepPlan plan_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        SweepPlan plan;
        plan.n_list = j.at("n_list").get<std::vector<int>>();

        const auto& qr = j.at("q_rule");
        if (qr.is_string()) {
            plan.q_rule = parse_q_rule(qr.get<std::string>());
        } else {
            plan.q_rule.explicit_qs = qr.get<std::vector<int>>();
            if (plan.q_rule.explicit_qs.size() != plan.n_list.size()) {
                throw OutOfRange("explicit q list must pair one q with each n");
            }
        }

        for (const auto& p : j.at("pairs")) {
            if (p.is_string()) {
                const std::string s = p.get<std::string>();
                const auto colon = s.find(':');
                if (colon == std::string::npos) {
                    throw OutOfRange("pair must be \"maker:breaker\": " + s);
                }
                plan.pairs.emplace_back(s.substr(0, colon), s.substr(colon + 1));
            } else {
                if (p.size() != 2) throw OutOfRange("pair must have two entries");
                plan.pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
            }
        }

        plan.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        if (j.contains("family")) {
            const std::string name = j.at("family").get<std::string>();
            const auto fam = parse_family(name);
            if (!fam) throw UnsupportedFamily("unknown family: " + name);
            plan.family = *fam;
        }
        if (j.contains("opportunistic")) plan.opportunistic = j.at("opportunistic").get<bool>();
        if (j.contains("random_free")) plan.random_free = j.at("random_free").get<bool>();

        if (plan.q_rule.kind == BoundKind::BeckKAP && plan.family.kind == Family::KAP) {
            plan.q_rule.k = plan.family.k;
        }
        return plan;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad sweep plan: ") + e.what());
    }
}

std::vector<ExperimentRecord> sweep(const SweepPlan& plan, int workers) {
    std::vector<GameConfig> jobs;
    for (std::size_t i = 0; i < plan.n_list.size(); ++i) {
        const int n = plan.n_list[i];
        const int q = plan.q_rule.q_for(n, i);
        for (const auto& [maker, breaker] : plan.pairs) {
            for (std::uint64_t seed : plan.seeds) {
                GameConfig cfg;
                cfg.n = n;
                cfg.q = q;
                cfg.family = plan.family;
                cfg.maker_id = maker;
                cfg.breaker_id = breaker;
                cfg.seed = seed;
                cfg.opportunistic_win = plan.opportunistic;
                cfg.random_free_placement = plan.random_free;
                cfg.validate();
                jobs.push_back(std::move(cfg));
            }
        }
    }

    std::vector<ExperimentRecord> records(jobs.size());
    if (jobs.empty()) return records;

    const int pool = std::clamp(workers, 1, static_cast<int>(jobs.size()));
    if (pool == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) records[i] = run_experiment(jobs[i]);
        return records;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                records[i] = run_experiment(jobs[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

std::string to_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream out;
    out << "n,q,family,maker,breaker,winner,rounds,t_star,max_forced_demand,violations,seed\n";
    for (const ExperimentRecord& r : records) {
        out << r.n << ',' << r.q << ',' << to_string(r.family) << ',' << r.maker_id << ','
            << r.breaker_id << ',' << to_string(r.winner) << ',' << r.rounds_played << ',';
        if (r.t_star) out << *r.t_star;
        out << ',' << r.max_forced_demand << ',' << r.guarantee_violations << ',' << r.seed
            << '\n';
    }
    return out.str();
}

void write_csv(const std::string& path, const std::vector<ExperimentRecord>& records) {
    const std::string body = to_csv(records);
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for write: " + tmp.string());
        out << body;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("rename failed for " + target.string() + ": " + ec.message());
    }
}

ThresholdEstimate empirical_threshold(const std::string& maker_id, const std::string& breaker_id,
                                      int n, FamilyKind family, const ThresholdSearchSpec& spec) {
    if (spec.q_lo >= spec.q_hi) throw OutOfRange("threshold search needs q_lo < q_hi");
    if (spec.q_lo < 1) throw OutOfRange("threshold search needs q_lo >= 1");
    if (spec.seeds_per_q < 1) throw OutOfRange("threshold search needs seeds_per_q >= 1");

    std::map<int, bool> breaker_sweeps; // q -> Breaker won every seed
    auto breaker_wins_all = [&](int q) {
        const auto hit = breaker_sweeps.find(q);
        if (hit != breaker_sweeps.end()) return hit->second;
        bool all = true;
        for (int i = 0; i < spec.seeds_per_q && all; ++i) {
            GameConfig cfg;
            cfg.n = n;
            cfg.q = q;
            cfg.family = family;
            cfg.maker_id = maker_id;
            cfg.breaker_id = breaker_id;
            cfg.seed = spec.seed_base + static_cast<std::uint64_t>(i);
            cfg.validate();
            all = play_game(cfg).result == Winner::Breaker;
        }
        breaker_sweeps[q] = all;
        return all;
    };

    if (breaker_wins_all(spec.q_lo)) {
        throw NoCrossover("breaker already wins at q_lo = " + std::to_string(spec.q_lo));
    }
    if (!breaker_wins_all(spec.q_hi)) {
        throw NoCrossover("breaker still loses at q_hi = " + std::to_string(spec.q_hi));
    }

    int lo = spec.q_lo, hi = spec.q_hi;
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (breaker_wins_all(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    const int w_lo = std::max(spec.q_lo, hi - spec.window);
    const int w_hi = std::min(spec.q_hi, hi + spec.window);
    ThresholdEstimate est;
    for (int q = w_lo; q <= w_hi; ++q) {
        est.frontier.emplace_back(q, breaker_wins_all(q) ? Winner::Breaker : Winner::Maker);
    }
    // Smallest q whose whole suffix inside the window is Breaker wins; the
    // scan can move the binary-search candidate when the frontier is bumpy.
    est.q_hat = w_hi;
    for (auto it = est.frontier.rbegin(); it != est.frontier.rend(); ++it) {
        if (it->second != Winner::Breaker) break;
        est.q_hat = it->first;
    }
    return est;
}

CalibrationResult calibrate(const std::vector<ExperimentRecord>& records) {
    CalibrationResult out;

    // Group by the additive shift C = q - ceil(sqrt(2n)).
    struct Tally {
        int games = 0;
        int breaker = 0;
        int maker = 0;
    };
    std::map<int, Tally> by_shift;
    for (const ExperimentRecord& r : records) {
        const long long base = ceil_isqrt(2LL * r.n);
        const int shift = r.q - static_cast<int>(base);
        Tally& t = by_shift[shift];
        ++t.games;
        ++(r.winner == Winner::Breaker ? t.breaker : t.maker);
    }
    if (by_shift.empty()) throw InsufficientData("no records to calibrate");

    // Smallest shift whose suffix of observed shifts is all Breaker wins:
    // the monotone-consistent answer even when small shifts are noisy.
    bool found = false;
    int best = 0;
    for (auto it = by_shift.rbegin(); it != by_shift.rend(); ++it) {
        if (it->second.maker > 0) break;
        best = it->first;
        found = true;
    }
    if (!found) {
        throw InsufficientData("breaker lost at the largest observed shift; raise the q grid");
    }
    out.C_cal = best;

    // Largest grid c (hundredths) whose games at q = floor(c * lower-bound)
    // are all Maker wins.
    for (int ci = 100; ci >= 1; --ci) {
        const double c = ci / 100.0;
        int games = 0;
        bool all_maker = true;
        for (const ExperimentRecord& r : records) {
            const int target =
                static_cast<int>(std::floor(c * evaluate_bound(BoundKind::PaperLower, r.n)));
            if (r.q != target) continue;
            ++games;
            if (r.winner != Winner::Maker) {
                all_maker = false;
                break;
            }
        }
        if (games > 0 && all_maker) {
            out.c_cal = c;
            out.c_cal_defined = true;
            break;
        }
    }
    return out;
}

} // namespace apgame
