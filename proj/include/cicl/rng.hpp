#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace cicl {

// SplitMix64 is the single PRNG used everywhere randomness appears.
// The exact update rule is part of the public contract so that independent
// reimplementations reproduce every sampled value bit for bit:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Bounded draws use plain modulo: bounded(n) = next() % n.
// Uniform doubles in [0, 1) use the top 53 bits: (next() >> 11) * 2^-53.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). n must be > 0.
    std::uint64_t bounded(std::uint64_t n) { return next() % n; }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// FNV-1a over the bytes of a string; used to fold labels into seeds and to
// seed per-token embedding streams.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Deterministic sub-stream seed for (seed, label): one SplitMix64 step from
// seed XOR fnv1a64(label).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
    return SplitMix64(seed ^ fnv1a64(label)).next();
}

// Fisher-Yates prefix: k distinct indices drawn uniformly from [0, n),
// returned in selection order. For i in [0, k): j = i + bounded(n - i), swap.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k,
                                               SplitMix64& rng) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.bounded(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

template <typename T>
void shuffle_in_place(std::vector<T>& items, SplitMix64& rng) {
    if (items.empty()) return;
    for (std::size_t i = items.size() - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng.bounded(i + 1));
        std::swap(items[i], items[j]);
    }
}

}  // namespace cicl
