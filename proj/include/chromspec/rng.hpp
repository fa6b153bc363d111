#pragma once

#include <cstdint>

namespace chromspec::rng {

// SplitMix64 finalizer: bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Fold a stream id into a key. Chain calls to key sub-streams:
// derive(derive(seed, i), j) is the (i, j) edge stream of `seed`.
constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t stream) noexcept {
    return mix64(key ^ (0x9e3779b97f4a7c15ull + mix64(stream)));
}

// Counter-mode generator: output i is a pure function of (key, i), so any
// sub-stream can be re-materialized in isolation, and parallel and serial
// execution draw identical values.
class Counter {
public:
    explicit constexpr Counter(std::uint64_t key) noexcept : key_(key) {}

    std::uint64_t next_u64() noexcept {
        return mix64(key_ + 0x9e3779b97f4a7c15ull * counter_++);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_unit() noexcept { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_unit(); }

    // Uniform in [0, bound), unbiased via rejection. bound >= 1.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace chromspec::rng
