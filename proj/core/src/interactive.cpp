#include "apgame/interactive.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace apgame {

namespace {

void show_threats(std::ostream& out, const GameState& s, const FamilyKind& f) {
    if (!f.pair_queries_supported()) return;
    std::vector<Pos> th = threats(s, f);
    if (th.empty()) {
        out << "no live threats.\n";
        return;
    }
    out << "live threats:";
    for (Pos p : th) out << ' ' << p;
    out << '\n';
}

// Reads one whitespace-separated token line by line; throws on EOF.
bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    return true;
}

} // namespace

HumanMaker::HumanMaker(const GameConfig& cfg, std::istream& in, std::ostream& out)
    : cfg_(cfg), in_(in), out_(out) {}

MakerDecision HumanMaker::next_move(const GameState& s) {
    const int r = s.round() + 1;
    out_ << "\n[round " << r << "] you are Maker.\n";
    show_threats(out_, s, cfg_.family);
    for (;;) {
        out_ << "enter one unclaimed position in [1, " << s.n() << "]: " << std::flush;
        std::string line;
        if (!read_line(in_, line)) throw NoLegalMove("input closed");
        std::istringstream iss(line);
        Pos p = 0;
        if (!(iss >> p)) {
            out_ << "not a number.\n";
            continue;
        }
        if (p < 1 || p > s.n()) {
            out_ << "out of range.\n";
            continue;
        }
        if (!s.unclaimed(p)) {
            out_ << "cell " << p << " is already claimed.\n";
            continue;
        }
        return {p, {}};
    }
}

HumanBreaker::HumanBreaker(const GameConfig& cfg, std::istream& in, std::ostream& out)
    : cfg_(cfg), in_(in), out_(out) {}

BreakerDecision HumanBreaker::next_moves(const GameState& s, Pos last_maker) {
    const int r = s.round() + 1;
    const int want = std::min(cfg_.q, s.unclaimed_count());
    out_ << "\n[round " << r << "] you are Breaker; Maker just played " << last_maker << ".\n";
    show_threats(out_, s, cfg_.family);
    for (;;) {
        out_ << "enter " << want << " distinct unclaimed positions in [1, " << s.n()
             << "] (space-separated): " << std::flush;
        std::string line;
        if (!read_line(in_, line)) throw NoLegalMove("input closed");
        std::istringstream iss(line);
        std::vector<Pos> batch;
        Pos p = 0;
        while (iss >> p) batch.push_back(p);
        if (static_cast<int>(batch.size()) != want) {
            out_ << "need exactly " << want << " positions, got " << batch.size() << ".\n";
            continue;
        }
        bool ok = true;
        std::vector<Pos> sorted = batch;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; ok && i < sorted.size(); ++i) {
            if (sorted[i] < 1 || sorted[i] > s.n()) {
                out_ << "position " << sorted[i] << " out of range.\n";
                ok = false;
            } else if (!s.unclaimed(sorted[i])) {
                out_ << "cell " << sorted[i] << " is already claimed.\n";
                ok = false;
            } else if (i > 0 && sorted[i] == sorted[i - 1]) {
                out_ << "cell " << sorted[i] << " repeated.\n";
                ok = false;
            }
        }
        if (!ok) continue;
        BreakerDecision d;
        d.free = batch;
        return d;
    }
}

} // namespace apgame
