#pragma once

#include <cstdint>
#include <vector>

namespace apgame {

// splitmix64: tiny, fast, and -- unlike std::uniform_int_distribution --
// produces the same stream on every platform, which transcript determinism
// depends on.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Debiased by rejection; bound must be > 0.
    uint64_t bounded(uint64_t bound) {
        uint64_t threshold = (0ull - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(bounded(static_cast<uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = bounded(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

// Derives independent per-actor streams from one game seed so that Maker and
// Breaker randomness never interleave.
inline uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    Rng r(seed ^ (0x632be59bd9b4e019ull * (salt + 1)));
    return r.next();
}

} // namespace apgame
