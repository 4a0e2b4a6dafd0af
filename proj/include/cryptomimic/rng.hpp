#pragma once

#include <cstdint>
#include <vector>

namespace cryptomimic {

/// SplitMix64, used to expand seeds into xoshiro state.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256** by Blackman and Vigna. This is the single PRNG used for every
/// randomized step in the project (dataset sampling, parameter init, epoch
/// shuffles) so that all results are reproducible from recorded seeds,
/// independent of platform and standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound) via rejection sampling (no modulo bias).
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform `bits`-bit value, bits in [1, 64].
    uint64_t bits(int bits) {
        return bits >= 64 ? next() : next() >> (64 - bits);
    }

    /// Uniform double in [0, 1).
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [-limit, limit).
    double symmetric(double limit) { return (2.0 * real() - 1.0) * limit; }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

/// Stable mix of a base seed with a stream index, for derived substreams.
inline uint64_t mix_seed(uint64_t base, uint64_t stream) {
    uint64_t sm = base ^ (0xA0761D6478BD642FULL * (stream + 1));
    return splitmix64(sm);
}

} // namespace cryptomimic
