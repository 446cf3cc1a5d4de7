#include "augtk/rng.hpp"

#include <stdexcept>

namespace augtk {

std::size_t Rng::below(std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be > 0");
    const std::uint64_t b = bound;
    // threshold = 2^64 mod bound; rejecting values under it removes modulo bias.
    const std::uint64_t threshold = (-b) % b;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return static_cast<std::size_t>(r % b);
    }
}

double Rng::real01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined state.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace augtk
