#pragma once

#include <cstdint>

namespace lambdacast {

// SplitMix64: tiny, well-mixed, and identical on every platform. All
// randomness in the project flows through this so that a (config, seed)
// pair replays bit-for-bit.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Mixes additional words into a seed; used to derive independent
// subseeds, e.g. per trial, per node, or per edge.
inline std::uint64_t mix_seed(std::uint64_t seed) {
    return SplitMix64(seed).next();
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a) {
    SplitMix64 s(seed ^ (a * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return s.next();
}

template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, Rest... rest) {
    return mix_seed(mix_seed(seed, a), rest...);
}

// Deterministic generator with unbiased bounded draws. Rejection
// sampling keeps bounded() exactly uniform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_.next(); }

    // Uniform in [0, n). n must be > 0.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = gen_.next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return next_double() < p;
    }

private:
    SplitMix64 gen_;
};

}  // namespace lambdacast
