// NEON kernel variants (aarch64, where NEON is baseline). Two 128-bit
// registers emulate the four-lane accumulation layout of the scalar
// reference: acc01 carries lanes 0-1, acc23 lanes 2-3, combined
// ((l0+l1)+(l2+l3)) as everywhere else.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

namespace chromspec::kernels::detail {

void rotate_pair_neon(double* x, double* y, std::size_t n, double c, double s) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const float64x2_t vx = vld1q_f64(x + k);
        const float64x2_t vy = vld1q_f64(y + k);
        vst1q_f64(x + k, vsubq_f64(vmulq_f64(vc, vx), vmulq_f64(vs, vy)));
        vst1q_f64(y + k, vaddq_f64(vmulq_f64(vs, vx), vmulq_f64(vc, vy)));
    }
    for (; k < n; ++k) {
        const double xk = x[k];
        const double yk = y[k];
        x[k] = c * xk - s * yk;
        y[k] = s * xk + c * yk;
    }
}

void scaled_add_neon(double* out, const double* a, const double* b, std::size_t n,
                     double scale) {
    const float64x2_t vscale = vdupq_n_f64(scale);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const float64x2_t va = vld1q_f64(a + k);
        const float64x2_t vb = vld1q_f64(b + k);
        vst1q_f64(out + k, vaddq_f64(va, vmulq_f64(vscale, vb)));
    }
    for (; k < n; ++k) out[k] = a[k] + scale * b[k];
}

double sum_squares_neon(const double* x, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const float64x2_t v01 = vld1q_f64(x + k);
        const float64x2_t v23 = vld1q_f64(x + k + 2);
        acc01 = vaddq_f64(acc01, vmulq_f64(v01, v01));
        acc23 = vaddq_f64(acc23, vmulq_f64(v23, v23));
    }
    const double l0 = vgetq_lane_f64(acc01, 0);
    const double l1 = vgetq_lane_f64(acc01, 1);
    const double l2 = vgetq_lane_f64(acc23, 0);
    const double l3 = vgetq_lane_f64(acc23, 1);
    double out = (l0 + l1) + (l2 + l3);
    for (; k < n; ++k) out += x[k] * x[k];
    return out;
}

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(x + k), vld1q_f64(y + k)));
        acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(x + k + 2), vld1q_f64(y + k + 2)));
    }
    const double l0 = vgetq_lane_f64(acc01, 0);
    const double l1 = vgetq_lane_f64(acc01, 1);
    const double l2 = vgetq_lane_f64(acc23, 0);
    const double l3 = vgetq_lane_f64(acc23, 1);
    double out = (l0 + l1) + (l2 + l3);
    for (; k < n; ++k) out += x[k] * y[k];
    return out;
}

} // namespace chromspec::kernels::detail

#endif // aarch64
