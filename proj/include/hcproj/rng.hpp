#pragma once

#include <cstdint>

namespace hcproj {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std engines so that every
// suite is reproducible from a bare 64-bit seed in any implementation language.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ull - (~0ull % bound);
        std::uint64_t v = next();
        while (v >= limit)
            v = next();
        return v % bound;
    }

    bool coin() { return next() >> 63; }

private:
    std::uint64_t state_;
};

/// Derives a substream seed, e.g. one per audit trial, from a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 g(base ^ (0x632be59bd9b4e019ull + index * 0x9e3779b97f4a7c15ull));
    return g.next();
}

} // namespace hcproj
