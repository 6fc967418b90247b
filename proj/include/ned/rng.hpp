#pragma once

#include <cstdint>
#include <random>

namespace ned {

// Seeded generator with cheap derived substreams. A child stream depends only
// on the parent's seed and the tag, never on how much the parent has already
// consumed, so replications can be farmed out to threads without changing a
// single draw.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(mix(seed)) {}

    // independent substream for (this seed, tag)
    Rng child(std::uint64_t tag) const {
        return Rng(mix(seed_ ^ mix(tag + 0x9E3779B97F4A7C15ull)));
    }

    std::uint64_t next_u64() { return gen_(); }

    // [0,1) with 53-bit resolution
    double uniform01() { return double(gen_() >> 11) * 0x1.0p-53; }

    // uniform over {0,...,n-1}, unbiased (rejection)
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t lim = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t x = gen_();
            if (x >= lim) return x % n;
        }
    }

    std::uint64_t seed() const { return seed_; }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace ned
