#include "apgame/family.hpp"

#include <algorithm>
#include <charconv>

namespace apgame {

std::string to_string(const FamilyKind& f) {
    switch (f.kind) {
        case Family::ThreeAP: return "3ap";
        case Family::KAP: return "kap:" + std::to_string(f.k);
        case Family::CyclicThreeAP: return "cyclic";
        case Family::SchurTriples: return "schur";
    }
    return "?";
}

std::optional<FamilyKind> parse_family(const std::string& text) {
    if (text == "3ap") return FamilyKind::three_ap();
    if (text == "cyclic") return FamilyKind::cyclic();
    if (text == "schur") return FamilyKind::schur();
    if (text.rfind("kap:", 0) == 0) {
        int k = 0;
        const char* first = text.data() + 4;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, k);
        if (ec != std::errc{} || ptr != last || k < 3) return std::nullopt;
        return FamilyKind::k_ap(k);
    }
    return std::nullopt;
}

namespace {

int mod_n(long long x, int n) {
    long long r = x % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

// Cells 1..n stand for residues mod n, with cell n playing residue 0.
int cell_of_residue(int r, int n) { return r == 0 ? n : r; }

void require_pair_family(const FamilyKind& f, const char* op) {
    if (!f.pair_queries_supported())
        throw UnsupportedFamily(std::string(op) + " is defined for size-3 families only, got " +
                                to_string(f));
}

} // namespace

std::vector<std::vector<Pos>> enumerate_winning_sets(const FamilyKind& f, int n) {
    std::vector<std::vector<Pos>> out;
    switch (f.kind) {
        case Family::ThreeAP:
        case Family::KAP: {
            const int k = f.set_size();
            if (k < 3) throw UnsupportedFamily("k-AP family requires k >= 3");
            for (Pos a = 1; a <= n; ++a) {
                for (Pos d = 1; a + static_cast<long long>(k - 1) * d <= n; ++d) {
                    std::vector<Pos> s(static_cast<size_t>(k));
                    for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = a + i * d;
                    out.push_back(std::move(s));
                }
            }
            break;
        }
        case Family::CyclicThreeAP: {
            if (n < 3) break;
            for (Pos a = 1; a <= n; ++a) {
                for (Pos b = a + 1; b <= n; ++b) {
                    CompletionSet cs = completions(f, a, b, n);
                    for (Pos z : cs)
                        if (z > b) out.push_back({a, b, z});
                }
            }
            break;
        }
        case Family::SchurTriples: {
            for (Pos a = 1; a <= n; ++a) {
                // b > a keeps the triple distinct; b != 2a would not (z = a + b
                // never collides with a or b).
                for (Pos b = a + 1; a + b <= n; ++b) out.push_back({a, b, a + b});
            }
            break;
        }
    }
    return out;
}

CompletionSet completions(const FamilyKind& f, Pos a, Pos b, int n) {
    require_pair_family(f, "completions");
    CompletionSet out;
    if (a == b) return out;
    switch (f.kind) {
        case Family::ThreeAP:
        case Family::KAP: {
            // Candidates: midpoint and the two reflections. For a != b the
            // three are pairwise distinct and never equal to a or b.
            Pos c[3];
            int m = 0;
            if ((a + b) % 2 == 0) c[m++] = (a + b) / 2;
            c[m++] = 2 * b - a;
            c[m++] = 2 * a - b;
            std::sort(c, c + m);
            for (int i = 0; i < m; ++i)
                if (c[i] >= 1 && c[i] <= n) out.push(c[i]);
            break;
        }
        case Family::CyclicThreeAP: {
            if (n < 3) return out;
            const int ra = a % n, rb = b % n;
            int cand[4];
            int m = 0;
            cand[m++] = mod_n(2LL * rb - ra, n);
            cand[m++] = mod_n(2LL * ra - rb, n);
            // z with a + b = 2z (mod n): unique when n is odd, two solutions
            // when n is even and a + b is even, none otherwise.
            if (n % 2 == 1) {
                cand[m++] = mod_n(static_cast<long long>(ra + rb) * ((n + 1) / 2), n);
            } else if ((ra + rb) % 2 == 0) {
                int h = mod_n((ra + rb) / 2, n);
                cand[m++] = h;
                cand[m++] = mod_n(h + n / 2, n);
            }
            Pos cells[4];
            int cm = 0;
            for (int i = 0; i < m; ++i) {
                Pos z = cell_of_residue(cand[i], n);
                if (z != a && z != b) cells[cm++] = z;
            }
            std::sort(cells, cells + cm);
            for (int i = 0; i < cm; ++i)
                if (i == 0 || cells[i] != cells[i - 1]) out.push(cells[i]);
            break;
        }
        case Family::SchurTriples: {
            Pos c[2];
            int m = 0;
            if (a + b <= n) c[m++] = a + b;
            Pos d = a > b ? a - b : b - a;
            if (d != a && d != b) c[m++] = d;
            std::sort(c, c + m);
            for (int i = 0; i < m; ++i) out.push(c[i]);
            break;
        }
    }
    return out;
}

bool is_winning_triple(const FamilyKind& f, Pos a, Pos b, Pos c, int n) {
    require_pair_family(f, "is_winning_triple");
    if (a == b || a == c || b == c) return false;
    Pos x = a, y = b, z = c;
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    if (x < 1 || z > n) return false;
    switch (f.kind) {
        case Family::ThreeAP:
        case Family::KAP:
            return x + z == 2 * y;
        case Family::CyclicThreeAP: {
            if (n < 3) return false;
            const int ra = a % n, rb = b % n, rc = c % n;
            return mod_n(ra + rb - 2LL * rc, n) == 0 || mod_n(ra + rc - 2LL * rb, n) == 0 ||
                   mod_n(rb + rc - 2LL * ra, n) == 0;
        }
        case Family::SchurTriples:
            return x + y == z;
    }
    return false;
}

} // namespace apgame
