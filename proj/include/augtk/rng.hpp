#pragma once

#include <cstdint>
#include <random>

namespace augtk {

// Deterministic pseudo-random stream. Bounded draws and reals are built on
// the raw 64-bit stream by hand: the standard distributions are
// implementation-defined, which would break byte-identical reproducibility
// across toolchains. Virtual so tests can pin individual draws.
class Rng {
public:
    virtual ~Rng() = default;

    virtual std::uint64_t next_u64() = 0;

    // Uniform integer in [0, bound). bound must be > 0. Rejection-sampled,
    // so the result is exactly uniform.
    virtual std::size_t below(std::size_t bound);

    // Uniform double in [0, 1) with 53 bits of mantissa.
    virtual double real01();

    // Derives an independent per-stream seed from a master seed, e.g. one
    // stream per sample id so parallel augmentation is schedule-independent.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);
};

class Mt19937Rng final : public Rng {
public:
    explicit Mt19937Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() override { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace augtk
