#include "augtk/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace augtk::kernels {

double dot_scalar(const float* a, const float* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

double squared_norm_scalar(const float* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += static_cast<double>(a[i]) * static_cast<double>(a[i]);
    return acc;
}

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "scalar";
}

namespace {

Isa detect_isa() {
#if defined(AUGTK_HAVE_AVX2_KERNELS)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return Isa::Avx2;
#endif
#if defined(AUGTK_HAVE_NEON_KERNELS)
    return Isa::Neon;
#endif
    return Isa::Scalar;
}

std::atomic<int> g_forced{-1};  // -1 = auto

Isa current() {
    const int forced = g_forced.load(std::memory_order_relaxed);
    if (forced >= 0) return static_cast<Isa>(forced);
    static const Isa detected = detect_isa();
    return detected;
}

}  // namespace

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(AUGTK_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(AUGTK_HAVE_NEON_KERNELS)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() { return current(); }

void force_isa(std::optional<Isa> isa) {
    if (!isa) {
        g_forced.store(-1, std::memory_order_relaxed);
        return;
    }
    if (!isa_available(*isa))
        throw std::invalid_argument(std::string("kernel variant unavailable: ") +
                                    isa_name(*isa));
    g_forced.store(static_cast<int>(*isa), std::memory_order_relaxed);
}

double dot(const float* a, const float* b, std::size_t n) {
    switch (current()) {
#if defined(AUGTK_HAVE_AVX2_KERNELS)
        case Isa::Avx2: return dot_avx2(a, b, n);
#endif
#if defined(AUGTK_HAVE_NEON_KERNELS)
        case Isa::Neon: return dot_neon(a, b, n);
#endif
        default: return dot_scalar(a, b, n);
    }
}

double squared_norm(const float* a, std::size_t n) {
    switch (current()) {
#if defined(AUGTK_HAVE_AVX2_KERNELS)
        case Isa::Avx2: return squared_norm_avx2(a, n);
#endif
#if defined(AUGTK_HAVE_NEON_KERNELS)
        case Isa::Neon: return squared_norm_neon(a, n);
#endif
        default: return squared_norm_scalar(a, n);
    }
}

}  // namespace augtk::kernels
