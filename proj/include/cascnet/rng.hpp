#pragma once

#include <cstdint>
#include <random>

namespace cascnet {

// All randomness in the project flows through std::mt19937_64 (fully specified
// by the standard) plus the helpers below, so a seed pins the exact byte
// stream on every platform.
using Rng = std::mt19937_64;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives a child seed from a master seed and a tuple of integer keys
// (splitmix64 finalizer folded over the parts). Order-sensitive.
template <class... Parts>
std::uint64_t derive_seed(std::uint64_t master, Parts... parts) {
    std::uint64_t h = mix64(master + 0x9e3779b97f4a7c15ULL);
    ((h = mix64(h ^ (static_cast<std::uint64_t>(parts) + 0x9e3779b97f4a7c15ULL))), ...);
    return h;
}

inline std::uint64_t fnv1a(const char* s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ULL;
    return h;
}

// Unbiased integer in [0, n) by rejection; avoids the implementation-defined
// behaviour of std::uniform_int_distribution.
template <class R>
std::uint64_t uniform_below(R& rng, std::uint64_t n) {
    const std::uint64_t bound = (0ULL - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= bound) return r % n;
    }
}

template <class R>
double uniform01(R& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace cascnet
