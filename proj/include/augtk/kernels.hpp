#pragma once

#include <cstddef>
#include <optional>

namespace augtk::kernels {

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa);

// Kernel variant compiled into this binary and usable on this CPU.
bool isa_available(Isa isa);

// Variant the dispatched entry points currently use.
Isa active_isa();

// Test hook: pin the dispatched entry points to one variant (must be
// available); nullopt restores runtime detection.
void force_isa(std::optional<Isa> isa);

// Dispatched entry points. Inputs are float rows; accumulation is done in
// double in every variant, so cross-variant results differ only by summation
// order (last-ulp effects).
double dot(const float* a, const float* b, std::size_t n);
double squared_norm(const float* a, std::size_t n);

// Reference kernels, always available.
double dot_scalar(const float* a, const float* b, std::size_t n);
double squared_norm_scalar(const float* a, std::size_t n);

#if defined(AUGTK_HAVE_AVX2_KERNELS)
double dot_avx2(const float* a, const float* b, std::size_t n);
double squared_norm_avx2(const float* a, std::size_t n);
#endif

#if defined(AUGTK_HAVE_NEON_KERNELS)
double dot_neon(const float* a, const float* b, std::size_t n);
double squared_norm_neon(const float* a, std::size_t n);
#endif

}  // namespace augtk::kernels
