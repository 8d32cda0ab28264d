#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace prefrank {

// mt19937_64 with hand-rolled distributions. The standard pins the engine's
// output sequence but not the distributions', and several outputs here must be
// byte-identical given a seed, so we keep the draws under our control.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n), n >= 1, by rejection
    uint64_t uniform_index(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Fisher-Yates shuffle of the whole range
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer, used to mix tags into stream seeds
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derive an independent stream seed from a base seed and up to three tags
// (e.g. fraction index, trial id). Same inputs, same stream.
inline uint64_t derive_seed(uint64_t base, uint64_t a = 0, uint64_t b = 0, uint64_t c = 0) {
    uint64_t s = mix64(base);
    s = mix64(s ^ (a + 0x1000000001b3ULL));
    s = mix64(s ^ (b + 0xcbf29ce484222325ULL));
    s = mix64(s ^ (c + 0x100000001b3ULL));
    return s;
}

}  // namespace prefrank
