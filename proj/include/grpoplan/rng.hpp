#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace grpoplan {

// All randomness in the pipeline flows from one root seed, fanned out by
// labeled derivation so each component can be re-run independently.
inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t root, std::string_view label, uint64_t a = 0, uint64_t b = 0) {
    uint64_t h = fnv1a64(label);
    h = splitmix64(h ^ splitmix64(root));
    h = splitmix64(h ^ splitmix64(a));
    h = splitmix64(h ^ splitmix64(b));
    return h;
}

// Uniform double in [0, 1) built directly from the top 53 bits so the
// stream does not depend on the standard library's distribution details.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

inline int uniform_int(std::mt19937_64& g, int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(g() % static_cast<uint64_t>(hi - lo + 1));
}

}  // namespace grpoplan
