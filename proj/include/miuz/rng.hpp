#ifndef MIUZ_RNG_HPP
#define MIUZ_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace miuz {

// Randomness policy: the engine is std::mt19937_64 (its output sequence is
// pinned by the C++ standard), and every draw on top of it is implemented
// here rather than with std::uniform_*_distribution / std::shuffle, whose
// algorithms vary across standard libraries. Same seed, same bytes, anywhere.

/// SplitMix64 finalizer step. Used to spread user-facing seeds and to derive
/// per-task seeds; the constant increment makes consecutive inputs diverge.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derives an independent seed from (base, a, b) by chaining two SplitMix64
/// steps. Order-sensitive: mix_seed(s, i, j) != mix_seed(s, j, i) in general.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = splitmix64(base + 0x9E3779B97F4A7C15ULL * (a + 1));
    return splitmix64(h + 0x9E3779B97F4A7C15ULL * (b + 1));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

/// Unbiased integer in [0, bound) via rejection; bound must be positive.
inline std::uint64_t next_bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

/// Double in [0, 1) with 53 random bits.
inline double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(next_bounded(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace miuz

#endif // MIUZ_RNG_HPP
