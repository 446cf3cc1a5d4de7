// NEON kernel variants for aarch64 builds.

#include "augtk/kernels.hpp"

#if defined(AUGTK_HAVE_NEON_KERNELS)

#include <arm_neon.h>

namespace augtk::kernels {

double dot_neon(const float* a, const float* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float32x4_t va = vld1q_f32(a + i);
        const float32x4_t vb = vld1q_f32(b + i);
        acc0 = vfmaq_f64(acc0, vcvt_f64_f32(vget_low_f32(va)),
                         vcvt_f64_f32(vget_low_f32(vb)));
        acc1 = vfmaq_f64(acc1, vcvt_f64_f32(vget_high_f32(va)),
                         vcvt_f64_f32(vget_high_f32(vb)));
    }
    double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i)
        acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

double squared_norm_neon(const float* a, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float32x4_t va = vld1q_f32(a + i);
        const float64x2_t lo = vcvt_f64_f32(vget_low_f32(va));
        const float64x2_t hi = vcvt_f64_f32(vget_high_f32(va));
        acc0 = vfmaq_f64(acc0, lo, lo);
        acc1 = vfmaq_f64(acc1, hi, hi);
    }
    double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i)
        acc += static_cast<double>(a[i]) * static_cast<double>(a[i]);
    return acc;
}

}  // namespace augtk::kernels

#endif  // AUGTK_HAVE_NEON_KERNELS
