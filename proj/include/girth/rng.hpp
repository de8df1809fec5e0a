#pragma once

#include <cstdint>

namespace girth {

// SplitMix64 (Steele/Lea/Flood). Every random choice in the library flows
// from one of these, constructed from an explicit 64-bit seed, so any run
// replays bit-identically from its seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound); bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Child-stream derivation: mixes a master seed with a stream index so that
// substreams are statistically independent yet fully reproducible. This is
// the one splitting function used everywhere (documented in the README).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 mix(master ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    return mix.next();
}

}  // namespace girth
