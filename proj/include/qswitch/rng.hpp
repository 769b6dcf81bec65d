#pragma once

#include <cstdint>

namespace qswitch {

// splitmix64. Deterministic for a given seed, cheap to fork into per-worker
// streams, and the full 64-bit seed fits in every report.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Rejection keeps it unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool next_bit() { return next() >> 63; }

    double next_double() { // [0, 1)
        return double(next() >> 11) * 0x1.0p-53;
    }

    // Independent stream for worker `index` of a sweep seeded with `seed`.
    static SplitMix64 fork(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

} // namespace qswitch
